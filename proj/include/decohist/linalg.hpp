// Copyright 2026 The decohist Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "decohist/error.hpp"

namespace decohist {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Library-wide numerical defaults. Every entry point that takes a tolerance
// defaults to one of these.
inline constexpr double kTolUnitary = 1e-10;
inline constexpr double kTolPartition = 1e-10;
inline constexpr double kTolState = 1e-10;
inline constexpr double kTolWitness = 1e-8;
inline constexpr double kTolDecoherence = 1e-10;
inline constexpr int kMaxDim = 64;

// Spectral reconstruction tolerance for a d-dimensional unitary.
inline double spectral_tolerance(int dim) { return 1e-10 * dim; }

// Throws kDimensionMismatch unless m is square with 1 <= dim <= kMaxDim.
void require_square(const ComplexMatrix& m, std::string_view what);

// Throws kNotUnitary unless validate_unitary(u, tol) holds.
void require_unitary(const ComplexMatrix& u, double tol = kTolUnitary);

// True iff ||M^dagger M - 1||_F <= tol * dim. Non-square input is never
// unitary.
bool validate_unitary(const ComplexMatrix& m, double tol);

// Largest singular value.
double operator_norm(const ComplexMatrix& a);

// a^n by repeated squaring; n >= 0.
ComplexMatrix matrix_power(const ComplexMatrix& a, long long n);

// U = sum_j exp(2 pi i phases[j]) |v_j><v_j| with v_j the j-th column of
// eigenvectors. Phases lie in [0, 1), sorted ascending.
struct UnitarySpectrum {
  std::vector<double> phases;
  ComplexMatrix eigenvectors;

  ComplexMatrix reconstruct() const;
  Complex eigenvalue(std::size_t j) const;
};

// Spectral decomposition through the complex Schur form. For a normal
// matrix the triangular factor is diagonal up to rounding, so the Schur
// vectors are an orthonormal eigenbasis even inside degenerate eigenspaces.
UnitarySpectrum unitary_spectrum(const ComplexMatrix& u,
                                 double tol = kTolUnitary);

}  // namespace decohist
