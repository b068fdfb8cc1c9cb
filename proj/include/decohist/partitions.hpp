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

#include <cstdint>
#include <optional>
#include <vector>

#include "decohist/linalg.hpp"

namespace decohist {

// An ordered set of mutually orthogonal projectors that sum to the identity.
// Partitions built from index blocks remember the blocks so that projections
// reduce to masking coordinates.
class ProjectivePartition {
 public:
  // Validates Hermiticity, idempotence, orthogonality and completeness of
  // the projectors within tol; throws kInvalidPartition otherwise.
  static ProjectivePartition from_projectors(std::vector<ComplexMatrix> projectors,
                                             double tol = kTolPartition);
  static ProjectivePartition from_blocks(int dim,
                                         std::vector<std::vector<int>> blocks);

  int dim() const { return dim_; }
  std::size_t size() const { return projectors_.size(); }
  const ComplexMatrix& projector(std::size_t mu) const { return projectors_.at(mu); }
  const std::vector<ComplexMatrix>& projectors() const { return projectors_; }
  const std::vector<int>& ranks() const { return ranks_; }
  int rank(std::size_t mu) const { return ranks_.at(mu); }

  bool basis_aligned() const { return blocks_.has_value(); }
  // Present only for basis-aligned partitions.
  const std::optional<std::vector<std::vector<int>>>& blocks() const { return blocks_; }

  // Orthonormal columns spanning supp(P_mu): computational basis vectors of
  // the block for basis-aligned partitions, otherwise the unit-eigenvalue
  // eigenvectors of P_mu.
  const ComplexMatrix& block_basis(std::size_t mu) const { return bases_.at(mu); }

  // Partition index owning each column of the concatenated block bases,
  // i.e. basis_vector(i) lies in block owner(i).
  std::size_t owner(int basis_index) const {
    return basis_index_.at(static_cast<std::size_t>(basis_index)).first;
  }
  ComplexVector basis_vector(int basis_index) const;

  // P_mu v.
  ComplexVector apply(std::size_t mu, const ComplexVector& v) const;

 private:
  ProjectivePartition() = default;
  void build_bases();

  int dim_ = 0;
  std::vector<ComplexMatrix> projectors_;
  std::vector<int> ranks_;
  std::optional<std::vector<std::vector<int>>> blocks_;
  std::vector<ComplexMatrix> bases_;
  std::vector<std::pair<std::size_t, Eigen::Index>> basis_index_;
};

ProjectivePartition partition_from_blocks(int dim,
                                          std::vector<std::vector<int>> blocks);

// Computational-basis partition {|i><i|}.
ProjectivePartition fine_partition(int dim);

bool is_fine_grained(const ProjectivePartition& p);

// Hermitian, positive semidefinite, unit trace (each within tol).
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix matrix, double tol = kTolState);

  // |psi><psi| for a normalized copy of psi.
  static DensityOperator pure(const ComplexVector& psi);

  const ComplexMatrix& matrix() const { return matrix_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

 private:
  ComplexMatrix matrix_;
};

// sum_mu P_mu m P_mu on an arbitrary operator.
ComplexMatrix classical_project(const ComplexMatrix& m, const ProjectivePartition& p);
DensityOperator classical_project(const DensityOperator& rho,
                                  const ProjectivePartition& p);

bool is_classical(const DensityOperator& rho, const ProjectivePartition& p,
                  double tol = kTolPartition);
// Same test on an arbitrary operator: ||classical_project(m) - m||_F <= tol.
bool is_classical(const ComplexMatrix& m, const ProjectivePartition& p,
                  double tol = kTolPartition);

// |mu,i><mu,j| with |mu,i> the i-th column of p.block_basis(mu).
struct ClassicalSpanElement {
  std::size_t block = 0;
  int row = 0;
  int col = 0;
  ComplexMatrix matrix;
};

// sum_mu rank_mu^2 elements whose span contains every classical state.
std::vector<ClassicalSpanElement> classical_span_basis(const ProjectivePartition& p);

// Random convex mixture over blocks of random mixtures of Haar-random pure
// states supported in each block. Deterministic in seed.
DensityOperator random_classical_state(const ProjectivePartition& p,
                                       std::uint64_t seed);

}  // namespace decohist
