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
#include "decohist/histories.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "decohist/parallel.hpp"

namespace decohist {
namespace {

// Magnitudes closer than this are treated as tied when picking the worst
// pair, so the lexicographic rule is not decided by rounding.
constexpr double kTieEps = 1e-12;

void require_inputs(const ComplexMatrix& u, const ProjectivePartition& p) {
  require_unitary(u);
  if (u.rows() != p.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "unitary and partition dimensions differ");
  }
}

void require_length(int k) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "history length must be at least 1, got " + std::to_string(k));
  }
}

void require_history(const History& h, const ProjectivePartition& p) {
  if (h.length() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "empty history");
  }
  for (std::size_t idx : h.indices()) {
    if (idx >= p.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "history index " + std::to_string(idx) + " out of range");
    }
  }
}

class WorstPair {
 public:
  void offer(double magnitude, const History& a, const History& b) {
    const bool better = !pair_ || magnitude > max_ + kTieEps;
    const bool tie = pair_ && std::abs(magnitude - max_) <= kTieEps &&
                     std::tie(a, b) < std::tie(pair_->first, pair_->second);
    if (better || tie) pair_ = HistoryPair(a, b);
    max_ = std::max(max_, magnitude);
  }

  void merge_into(DecoherenceReport& report) const {
    report.max_offdiag = max_;
    report.worst_pair = pair_;
    report.decoherent = max_ <= report.tol;
  }

 private:
  double max_ = 0.0;
  std::optional<HistoryPair> pair_;
};

void grow(const ComplexMatrix& u, const ProjectivePartition& p, const ComplexVector& v,
          int remaining, double prune_tol, std::size_t budget,
          std::vector<std::size_t>& path, BranchMap& out) {
  const ComplexVector evolved = u * v;
  for (std::size_t mu = 0; mu < p.size(); ++mu) {
    ComplexVector branch = p.apply(mu, evolved);
    if (branch.norm() <= prune_tol) continue;
    path.push_back(mu);
    if (remaining == 1) {
      if (out.size() >= budget) {
        throw Error(ErrorCode::kKTooLarge,
                    "more than " + std::to_string(budget) + " surviving branches");
      }
      out.emplace(History(path), std::move(branch));
    } else {
      grow(u, p, branch, remaining - 1, prune_tol, budget, path, out);
    }
    path.pop_back();
  }
}

// Branches stored as sorted (history, vector) lists for pair loops.
using BranchList = std::vector<std::pair<History, ComplexVector>>;

BranchList to_list(BranchMap&& m) {
  BranchList out;
  out.reserve(m.size());
  for (auto& [h, v] : m) out.emplace_back(h, std::move(v));
  return out;
}

}  // namespace

std::string History::to_string() const {
  std::string out = "(";
  for (std::size_t t = 0; t < indices_.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(indices_[t]);
  }
  return out + ")";
}

ComplexMatrix branch_operator(const ComplexMatrix& u, const ProjectivePartition& p,
                              const History& h) {
  require_inputs(u, p);
  require_history(h, p);
  ComplexMatrix b = ComplexMatrix::Identity(u.rows(), u.cols());
  for (std::size_t idx : h.indices()) b = p.projector(idx) * (u * b);
  return b;
}

ComplexMatrix chain_operator(const ComplexMatrix& u, const ProjectivePartition& p,
                             const History& h) {
  const ComplexMatrix b = branch_operator(u, p, h);
  return matrix_power(u.adjoint(), static_cast<long long>(h.length())) * b;
}

Complex decoherence_functional(const ComplexMatrix& u, const ComplexMatrix& rho,
                               const ProjectivePartition& p, const History& ha,
                               const History& hb) {
  if (ha.length() != hb.length()) {
    throw Error(ErrorCode::kLengthMismatch, "histories have different lengths");
  }
  if (rho.rows() != p.dim() || rho.cols() != p.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "state and partition dimensions differ");
  }
  const ComplexMatrix ba = branch_operator(u, p, ha);
  const ComplexMatrix bb = branch_operator(u, p, hb);
  return (ba * rho * bb.adjoint()).trace();
}

BranchMap branch_vectors(const ComplexMatrix& u, const ProjectivePartition& p,
                         const ComplexVector& v, int k, double prune_tol,
                         std::size_t budget) {
  require_inputs(u, p);
  require_length(k);
  if (v.size() != p.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "vector and partition dimensions differ");
  }
  if (std::abs(v.norm() - 1.0) > 1e-10) {
    throw Error(ErrorCode::kInvalidArgument, "initial vector is not normalized");
  }
  BranchMap out;
  std::vector<std::size_t> path;
  path.reserve(static_cast<std::size_t>(k));
  grow(u, p, v, k, prune_tol, budget, path, out);
  return out;
}

DecoherenceReport decoherence_check(const ComplexMatrix& u, const DensityOperator& rho,
                                    const ProjectivePartition& p, int k, double tol,
                                    std::size_t budget) {
  require_inputs(u, p);
  require_length(k);
  if (rho.dim() != p.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "state and partition dimensions differ");
  }

  // rho = sum_s w_s |v_s><v_s|; components with |w_s| <= tol / 10 cannot
  // move any entry of D by more than that.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rho.matrix());
  const double prune = prune_tolerance(tol, k);
  std::vector<double> weights;
  std::vector<BranchMap> branches;
  std::size_t total = 0;
  for (Eigen::Index s = eig.eigenvalues().size() - 1; s >= 0; --s) {
    const double w = eig.eigenvalues()(s);
    if (std::abs(w) <= tol / 10.0) continue;
    branches.push_back(branch_vectors(u, p, eig.eigenvectors().col(s), k, prune,
                                      budget - std::min(total, budget)));
    total += branches.back().size();
    weights.push_back(w);
  }

  std::map<History, Eigen::Index> index;
  for (const auto& b : branches) {
    for (const auto& [h, vec] : b) index.emplace(h, 0);
  }
  std::vector<History> histories;
  histories.reserve(index.size());
  for (auto& [h, i] : index) {
    i = static_cast<Eigen::Index>(histories.size());
    histories.push_back(h);
  }

  const Eigen::Index n = static_cast<Eigen::Index>(histories.size());
  const Eigen::Index dim = rho.dim();
  std::vector<ComplexMatrix> columns;
  for (const auto& b : branches) {
    ComplexMatrix m = ComplexMatrix::Zero(dim, n);
    for (const auto& [h, vec] : b) m.col(index.at(h)) = vec;
    columns.push_back(std::move(m));
  }

  DecoherenceReport report;
  report.k = k;
  report.tol = tol;
  report.num_branches = total;

  for (Eigen::Index a = 0; a < n; ++a) {
    double diag = 0.0;
    for (std::size_t s = 0; s < columns.size(); ++s) {
      diag += weights[s] * columns[s].col(a).squaredNorm();
    }
    report.diagonal.emplace(histories[static_cast<std::size_t>(a)], diag);
  }

  // Hermitian rho gives D[b, a] = conj(D[a, b]), and (a, b) with a < b is
  // the lexicographically smaller of the two orderings.
  WorstPair worst;
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a + 1; b < n; ++b) {
      Complex value = 0.0;
      for (std::size_t s = 0; s < columns.size(); ++s) {
        value += weights[s] * columns[s].col(b).dot(columns[s].col(a));
      }
      worst.offer(std::abs(value), histories[static_cast<std::size_t>(a)],
                  histories[static_cast<std::size_t>(b)]);
    }
  }
  worst.merge_into(report);
  return report;
}

DecoherenceReport decoherence_check_all_classical(const ComplexMatrix& u,
                                                  const ProjectivePartition& p, int k,
                                                  double tol, std::size_t budget) {
  require_inputs(u, p);
  require_length(k);
  const int dim = p.dim();
  const double prune = prune_tolerance(tol, k);

  std::vector<BranchList> per_basis(static_cast<std::size_t>(dim));
  parallel_for(per_basis.size(), [&](std::size_t i) {
    per_basis[i] = to_list(branch_vectors(u, p, p.basis_vector(static_cast<int>(i)), k,
                                          prune, budget));
  });

  DecoherenceReport report;
  report.k = k;
  report.tol = tol;
  for (const auto& list : per_basis) report.num_branches += list.size();
  if (report.num_branches > budget) {
    throw Error(ErrorCode::kKTooLarge,
                "more than " + std::to_string(budget) + " surviving branches");
  }

  // Uniform classical state 1/d = (1/d) sum_i |b_i><b_i|.
  for (const auto& list : per_basis) {
    for (const auto& [h, vec] : list) {
      report.diagonal[h] += vec.squaredNorm() / dim;
    }
  }

  // Element |b_i><b_j| (i, j in the same block): D[a, b] = <B_b b_j, B_a b_i>.
  WorstPair worst;
  int offset = 0;
  for (std::size_t mu = 0; mu < p.size(); ++mu) {
    const int rank = p.rank(mu);
    for (int i = offset; i < offset + rank; ++i) {
      for (int j = offset; j < offset + rank; ++j) {
        const auto& left = per_basis[static_cast<std::size_t>(i)];
        const auto& right = per_basis[static_cast<std::size_t>(j)];
        for (const auto& [ha, va] : left) {
          for (const auto& [hb, vb] : right) {
            if (ha == hb) continue;
            worst.offer(std::abs(vb.dot(va)), ha, hb);
          }
        }
      }
    }
    offset += rank;
  }
  worst.merge_into(report);
  return report;
}

Complex endpoint_condition_check(const ComplexMatrix& u, const ProjectivePartition& p,
                                 int k, std::size_t alpha1, std::size_t beta1,
                                 std::size_t alphak, std::size_t betak,
                                 const ComplexMatrix& rho) {
  require_inputs(u, p);
  if (k < 2) {
    throw Error(ErrorCode::kInvalidArgument, "endpoint condition needs k >= 2");
  }
  for (std::size_t idx : {alpha1, beta1, alphak, betak}) {
    if (idx >= p.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "partition index " + std::to_string(idx) + " out of range");
    }
  }
  if (rho.rows() != p.dim() || rho.cols() != p.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "state and partition dimensions differ");
  }
  const ComplexMatrix power = matrix_power(u, k - 1);
  const ComplexMatrix left = p.projector(alphak) * power * p.projector(alpha1) * u;
  const ComplexMatrix right = p.projector(betak) * power * p.projector(beta1) * u;
  return (left * rho * right.adjoint()).trace();
}

std::map<History, double> history_probabilities(const ComplexMatrix& u,
                                                const DensityOperator& rho,
                                                const ProjectivePartition& p, int k,
                                                double tol) {
  auto report = decoherence_check(u, rho, p, k, tol);
  if (!report.decoherent) {
    throw Error(ErrorCode::kNotDecoherent,
                "max off-diagonal " + std::to_string(report.max_offdiag) +
                    " exceeds tol at k = " + std::to_string(k));
  }
  return std::move(report.diagonal);
}

}  // namespace decohist
