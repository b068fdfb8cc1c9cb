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
#include "decohist/classicality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

namespace decohist {
namespace {

void require_compatible(const ComplexMatrix& u, const ProjectivePartition& p) {
  require_unitary(u);
  if (u.rows() != p.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "unitary and partition dimensions differ");
  }
}

// Indices sorted by descending weight, ties by ascending index.
std::vector<std::size_t> rank_by_weight(const std::vector<double>& weight) {
  std::vector<std::size_t> order(weight.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weight[a] > weight[b];
  });
  return order;
}

std::optional<NonClassicalityWitness> fine_witness(const ComplexMatrix& u,
                                                   const ProjectivePartition& p,
                                                   double tol) {
  const int dim = p.dim();
  ComplexMatrix basis(dim, dim);
  for (int i = 0; i < dim; ++i) basis.col(i) = p.block_basis(static_cast<std::size_t>(i)).col(0);
  // Matrix elements <mu|U|nu> in the partition basis.
  const ComplexMatrix w = basis.adjoint() * u * basis;

  for (int src = 0; src < dim; ++src) {
    std::vector<double> mag(static_cast<std::size_t>(dim));
    int above = 0;
    for (int r = 0; r < dim; ++r) {
      mag[static_cast<std::size_t>(r)] = std::abs(w(r, src));
      if (mag[static_cast<std::size_t>(r)] > tol) ++above;
    }
    if (above < 2) continue;
    const auto order = rank_by_weight(mag);
    NonClassicalityWitness out;
    out.mu0 = static_cast<std::size_t>(src);
    out.source_vector = basis.col(src);
    out.mu_prime = order[0];
    out.mu_dprime = order[1];
    out.c_prime = w(static_cast<Eigen::Index>(order[0]), src);
    out.c_dprime = w(static_cast<Eigen::Index>(order[1]), src);
    return out;
  }
  return std::nullopt;
}

NonClassicalityWitness witness_from_source(const ComplexMatrix& u,
                                           const ProjectivePartition& p,
                                           std::size_t mu0,
                                           const ComplexVector& source) {
  const ComplexVector image = u * source;
  std::vector<double> overlap(p.size());
  for (std::size_t nu = 0; nu < p.size(); ++nu) {
    overlap[nu] = (p.block_basis(nu).adjoint() * image).norm();
  }
  const auto order = rank_by_weight(overlap);
  NonClassicalityWitness out;
  out.mu0 = mu0;
  out.source_vector = source;
  out.mu_prime = order[0];
  out.mu_dprime = order[1];
  out.c_prime = overlap[order[0]];
  out.c_dprime = overlap[order[1]];
  return out;
}

// For each source block mu, the compressions
//   M_nu = B_mu^dagger U^dagger P_nu U B_mu
// sum to the identity and M_nu has eigenvalue ||P_nu U v||^2 on v. An
// eigenvalue strictly inside (tol, 1 - tol) gives a vector whose image is
// split. If every M_nu is a projector but two of them are nonzero, the block
// is carried onto two orthogonal pieces, and the normalized sum of one unit
// vector from each piece is split evenly.
std::optional<NonClassicalityWitness> coarse_witness(const ComplexMatrix& u,
                                                     const ProjectivePartition& p,
                                                     double tol) {
  for (std::size_t mu = 0; mu < p.size(); ++mu) {
    const ComplexMatrix& b = p.block_basis(mu);
    const ComplexMatrix image = u * b;
    std::vector<ComplexVector> pieces;
    for (std::size_t nu = 0; nu < p.size(); ++nu) {
      const ComplexMatrix projected = p.block_basis(nu).adjoint() * image;
      const ComplexMatrix m = projected.adjoint() * projected;
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(m);
      const auto& values = eig.eigenvalues();
      for (Eigen::Index s = 0; s < values.size(); ++s) {
        if (values(s) > tol && values(s) < 1.0 - tol) {
          return witness_from_source(u, p, mu, b * eig.eigenvectors().col(s));
        }
      }
      if (values(values.size() - 1) >= 1.0 - tol) {
        pieces.push_back(b * eig.eigenvectors().col(values.size() - 1));
      }
    }
    if (pieces.size() >= 2) {
      const ComplexVector source = (pieces[0] + pieces[1]).normalized();
      return witness_from_source(u, p, mu, source);
    }
  }
  return std::nullopt;
}

std::optional<NonClassicalityWitness> find_witness(const ComplexMatrix& u,
                                                   const ProjectivePartition& p,
                                                   double tol) {
  auto w = is_fine_grained(p) ? fine_witness(u, p, tol) : coarse_witness(u, p, tol);
  if (w && std::abs(w->c_prime) > tol && std::abs(w->c_dprime) > tol) return w;
  return std::nullopt;
}

}  // namespace

bool is_monomial(const ComplexMatrix& u, double tol) {
  require_unitary(u);
  for (Eigen::Index c = 0; c < u.cols(); ++c) {
    int above = 0;
    double peak = 0.0;
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
      const double m = std::abs(u(r, c));
      if (m > tol) {
        ++above;
        peak = m;
      }
    }
    if (above != 1 || std::abs(peak - 1.0) > tol) return false;
  }
  return true;
}

PreservationReport preserves_classicality(const ComplexMatrix& u,
                                          const ProjectivePartition& p,
                                          double tol) {
  require_compatible(u, p);
  std::vector<std::size_t> map;
  std::vector<bool> taken(p.size(), false);
  bool permutes = true;
  for (std::size_t mu = 0; mu < p.size() && permutes; ++mu) {
    const ComplexMatrix image = u * p.projector(mu) * u.adjoint();
    bool found = false;
    for (std::size_t nu = 0; nu < p.size(); ++nu) {
      if (!taken[nu] && p.rank(nu) == p.rank(mu) &&
          (image - p.projector(nu)).norm() <= tol) {
        taken[nu] = true;
        map.push_back(nu);
        found = true;
        break;
      }
    }
    permutes = found;
  }

  PreservationReport report;
  if (permutes) {
    report.preserved = true;
    report.block_map = std::move(map);
    return report;
  }
  report.witness = find_witness(u, p, tol);
  if (!report.witness) {
    throw Error(ErrorCode::kNoWitness,
                "projector images are not a permutation at tol, but no split "
                "image exceeds tol; the unitary is within rounding of the boundary");
  }
  return report;
}

NonClassicalityWitness extract_witness(const ComplexMatrix& u,
                                       const ProjectivePartition& p, double tol) {
  require_compatible(u, p);
  auto w = find_witness(u, p, tol);
  if (!w) {
    throw Error(ErrorCode::kNoWitness, "unitary preserves classicality");
  }
  return *w;
}

}  // namespace decohist
