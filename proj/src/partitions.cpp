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
#include "decohist/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

namespace decohist {
namespace {

ComplexVector haar_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

// Uniform point on the probability simplex.
std::vector<double> simplex_weights(std::size_t n, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    x = expo(rng);
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

}  // namespace

ProjectivePartition ProjectivePartition::from_projectors(
    std::vector<ComplexMatrix> projectors, double tol) {
  if (projectors.empty()) {
    throw Error(ErrorCode::kInvalidPartition, "partition has no projectors");
  }
  const auto dim = projectors.front().rows();
  ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
  for (std::size_t mu = 0; mu < projectors.size(); ++mu) {
    const auto& p = projectors[mu];
    require_square(p, "projector");
    if (p.rows() != dim) {
      throw Error(ErrorCode::kInvalidPartition, "projector dimensions differ");
    }
    const std::string tag = "projector " + std::to_string(mu);
    if ((p - p.adjoint()).norm() > tol) {
      throw Error(ErrorCode::kInvalidPartition, tag + " is not Hermitian");
    }
    if ((p * p - p).norm() > tol) {
      throw Error(ErrorCode::kInvalidPartition, tag + " is not idempotent");
    }
    for (std::size_t nu = 0; nu < mu; ++nu) {
      if ((p * projectors[nu]).norm() > tol) {
        throw Error(ErrorCode::kInvalidPartition,
                    tag + " is not orthogonal to projector " + std::to_string(nu));
      }
    }
    total += p;
  }
  if ((total - ComplexMatrix::Identity(dim, dim)).norm() > tol) {
    throw Error(ErrorCode::kInvalidPartition, "projectors do not sum to identity");
  }

  ProjectivePartition out;
  out.dim_ = static_cast<int>(dim);
  for (const auto& p : projectors) {
    const int rank = static_cast<int>(std::lround(p.trace().real()));
    if (rank < 1) {
      throw Error(ErrorCode::kInvalidPartition, "projector of rank zero");
    }
    out.ranks_.push_back(rank);
  }
  out.projectors_ = std::move(projectors);
  out.build_bases();
  return out;
}

ProjectivePartition ProjectivePartition::from_blocks(
    int dim, std::vector<std::vector<int>> blocks) {
  if (dim < 1 || dim > kMaxDim) {
    throw Error(ErrorCode::kInvalidBlocks, "dimension out of range");
  }
  if (blocks.empty()) {
    throw Error(ErrorCode::kInvalidBlocks, "no blocks given");
  }
  std::vector<int> seen(static_cast<std::size_t>(dim), -1);
  for (std::size_t mu = 0; mu < blocks.size(); ++mu) {
    if (blocks[mu].empty()) {
      throw Error(ErrorCode::kInvalidBlocks, "block " + std::to_string(mu) + " is empty");
    }
    for (int i : blocks[mu]) {
      if (i < 0 || i >= dim) {
        throw Error(ErrorCode::kInvalidBlocks,
                    "index " + std::to_string(i) + " out of range");
      }
      auto& slot = seen[static_cast<std::size_t>(i)];
      if (slot != -1) {
        throw Error(ErrorCode::kInvalidBlocks,
                    "index " + std::to_string(i) + " appears in blocks " +
                        std::to_string(slot) + " and " + std::to_string(mu));
      }
      slot = static_cast<int>(mu);
    }
  }
  for (int i = 0; i < dim; ++i) {
    if (seen[static_cast<std::size_t>(i)] == -1) {
      throw Error(ErrorCode::kInvalidBlocks,
                  "index " + std::to_string(i) + " is not covered");
    }
  }

  ProjectivePartition out;
  out.dim_ = dim;
  for (auto& block : blocks) {
    ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
    for (int i : block) p(i, i) = 1.0;
    out.projectors_.push_back(std::move(p));
    out.ranks_.push_back(static_cast<int>(block.size()));
  }
  out.blocks_ = std::move(blocks);
  out.build_bases();
  return out;
}

void ProjectivePartition::build_bases() {
  bases_.clear();
  basis_index_.clear();
  for (std::size_t mu = 0; mu < projectors_.size(); ++mu) {
    const int rank = ranks_[mu];
    ComplexMatrix basis(dim_, rank);
    if (blocks_) {
      const auto& block = (*blocks_)[mu];
      basis.setZero();
      for (int c = 0; c < rank; ++c) basis(block[static_cast<std::size_t>(c)], c) = 1.0;
    } else {
      // Eigenvalues ascend, so the unit eigenvalues are the last rank ones.
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(projectors_[mu]);
      basis = eig.eigenvectors().rightCols(rank);
    }
    for (Eigen::Index c = 0; c < rank; ++c) basis_index_.emplace_back(mu, c);
    bases_.push_back(std::move(basis));
  }
}

ComplexVector ProjectivePartition::basis_vector(int basis_index) const {
  const auto [mu, c] = basis_index_.at(static_cast<std::size_t>(basis_index));
  return bases_[mu].col(c);
}

ComplexVector ProjectivePartition::apply(std::size_t mu, const ComplexVector& v) const {
  if (blocks_) {
    ComplexVector out = ComplexVector::Zero(v.size());
    for (int i : (*blocks_)[mu]) out(i) = v(i);
    return out;
  }
  return projectors_[mu] * v;
}

ProjectivePartition partition_from_blocks(int dim,
                                          std::vector<std::vector<int>> blocks) {
  return ProjectivePartition::from_blocks(dim, std::move(blocks));
}

ProjectivePartition fine_partition(int dim) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < dim; ++i) blocks.push_back({i});
  return ProjectivePartition::from_blocks(dim, std::move(blocks));
}

bool is_fine_grained(const ProjectivePartition& p) {
  return std::all_of(p.ranks().begin(), p.ranks().end(),
                     [](int r) { return r == 1; });
}

DensityOperator::DensityOperator(ComplexMatrix matrix, double tol)
    : matrix_(std::move(matrix)) {
  require_square(matrix_, "density operator");
  if (!matrix_.allFinite()) {
    throw Error(ErrorCode::kInvalidState, "non-finite entries");
  }
  if ((matrix_ - matrix_.adjoint()).norm() > tol) {
    throw Error(ErrorCode::kInvalidState, "not Hermitian");
  }
  if (std::abs(matrix_.trace() - Complex(1.0)) > tol) {
    throw Error(ErrorCode::kInvalidState, "trace differs from one");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(matrix_, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -tol) {
    throw Error(ErrorCode::kInvalidState, "negative eigenvalue");
  }
}

DensityOperator DensityOperator::pure(const ComplexVector& psi) {
  const double n = psi.norm();
  if (!(n > 0.0)) throw Error(ErrorCode::kInvalidState, "zero state vector");
  const ComplexVector unit = psi / n;
  return DensityOperator(unit * unit.adjoint());
}

ComplexMatrix classical_project(const ComplexMatrix& m, const ProjectivePartition& p) {
  if (m.rows() != p.dim() || m.cols() != p.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "operator and partition dimensions differ");
  }
  if (p.basis_aligned()) {
    // Keep the in-block entries, zero everything else.
    ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
    for (const auto& block : *p.blocks()) {
      for (int r : block) {
        for (int c : block) out(r, c) = m(r, c);
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
  for (const auto& proj : p.projectors()) out += proj * m * proj;
  return out;
}

DensityOperator classical_project(const DensityOperator& rho,
                                  const ProjectivePartition& p) {
  return DensityOperator(classical_project(rho.matrix(), p));
}

bool is_classical(const ComplexMatrix& m, const ProjectivePartition& p, double tol) {
  return (classical_project(m, p) - m).norm() <= tol;
}

bool is_classical(const DensityOperator& rho, const ProjectivePartition& p,
                  double tol) {
  return is_classical(rho.matrix(), p, tol);
}

std::vector<ClassicalSpanElement> classical_span_basis(const ProjectivePartition& p) {
  std::vector<ClassicalSpanElement> out;
  for (std::size_t mu = 0; mu < p.size(); ++mu) {
    const auto& basis = p.block_basis(mu);
    for (int i = 0; i < p.rank(mu); ++i) {
      for (int j = 0; j < p.rank(mu); ++j) {
        out.push_back({mu, i, j, basis.col(i) * basis.col(j).adjoint()});
      }
    }
  }
  return out;
}

DensityOperator random_classical_state(const ProjectivePartition& p,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto block_weights = simplex_weights(p.size(), rng);
  ComplexMatrix rho = ComplexMatrix::Zero(p.dim(), p.dim());
  for (std::size_t mu = 0; mu < p.size(); ++mu) {
    const auto& basis = p.block_basis(mu);
    const int rank = p.rank(mu);
    const auto mix = simplex_weights(static_cast<std::size_t>(rank), rng);
    for (int s = 0; s < rank; ++s) {
      const ComplexVector psi = basis * haar_vector(rank, rng);
      rho += block_weights[mu] * mix[static_cast<std::size_t>(s)] * psi * psi.adjoint();
    }
  }
  // Exact Hermitian symmetrization before validation.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityOperator(std::move(rho));
}

}  // namespace decohist
