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

#include "decohist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace decohist {

void require_square(const ComplexMatrix& m, std::string_view what) {
  if (m.rows() != m.cols() || m.rows() < 1 || m.rows() > kMaxDim) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + " must be square with dimension in [1, " +
                    std::to_string(kMaxDim) + "], got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

bool validate_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() < 1) return false;
  if (!m.allFinite()) return false;
  const auto dim = m.rows();
  const double residual =
      (m.adjoint() * m - ComplexMatrix::Identity(dim, dim)).norm();
  return residual <= tol * static_cast<double>(dim);
}

void require_unitary(const ComplexMatrix& u, double tol) {
  require_square(u, "unitary");
  if (!validate_unitary(u, tol)) {
    throw Error(ErrorCode::kNotUnitary,
                "matrix fails ||U^dagger U - 1||_F <= tol * dim");
  }
}

double operator_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues()(0);
}

ComplexMatrix matrix_power(const ComplexMatrix& a, long long n) {
  if (n < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative matrix power");
  }
  ComplexMatrix result = ComplexMatrix::Identity(a.rows(), a.cols());
  ComplexMatrix base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Complex UnitarySpectrum::eigenvalue(std::size_t j) const {
  return std::polar(1.0, 2.0 * std::numbers::pi * phases.at(j));
}

ComplexMatrix UnitarySpectrum::reconstruct() const {
  const auto dim = eigenvectors.rows();
  Eigen::VectorXcd values(static_cast<Eigen::Index>(phases.size()));
  for (std::size_t j = 0; j < phases.size(); ++j) {
    values(static_cast<Eigen::Index>(j)) = eigenvalue(j);
  }
  ComplexMatrix out(dim, dim);
  out.noalias() = eigenvectors * values.asDiagonal() * eigenvectors.adjoint();
  return out;
}

UnitarySpectrum unitary_spectrum(const ComplexMatrix& u, double tol) {
  require_unitary(u, tol);
  const auto dim = u.rows();

  Eigen::ComplexSchur<ComplexMatrix> schur(u);
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::kNotUnitary, "Schur reduction did not converge");
  }
  const ComplexMatrix& t = schur.matrixT();
  const ComplexMatrix& q = schur.matrixU();

  std::vector<double> raw(static_cast<std::size_t>(dim));
  for (Eigen::Index j = 0; j < dim; ++j) {
    double phase = std::arg(t(j, j)) / (2.0 * std::numbers::pi);
    if (phase < 0.0) phase += 1.0;
    // arg() of an eigenvalue just below the positive real axis lands a
    // rounding error short of 1.
    if (phase >= 1.0 - 1e-13) phase = 0.0;
    raw[static_cast<std::size_t>(j)] = phase;
  }

  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return raw[a] < raw[b]; });

  UnitarySpectrum spectrum;
  spectrum.phases.reserve(raw.size());
  spectrum.eigenvectors.resize(dim, dim);
  for (std::size_t j = 0; j < order.size(); ++j) {
    spectrum.phases.push_back(raw[order[j]]);
    spectrum.eigenvectors.col(static_cast<Eigen::Index>(j)) =
        q.col(static_cast<Eigen::Index>(order[j]));
  }
  return spectrum;
}

}  // namespace decohist
