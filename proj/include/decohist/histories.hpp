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

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decohist/linalg.hpp"
#include "decohist/partitions.hpp"

namespace decohist {

// Time-ordered sequence of partition indices, one per application of U.
// Ordered lexicographically.
class History {
 public:
  History() = default;
  explicit History(std::vector<std::size_t> indices) : indices_(std::move(indices)) {}
  History(std::initializer_list<std::size_t> indices) : indices_(indices) {}

  std::size_t length() const { return indices_.size(); }
  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t operator[](std::size_t t) const { return indices_[t]; }

  std::string to_string() const;

  auto operator<=>(const History&) const = default;
  bool operator==(const History&) const = default;

 private:
  std::vector<std::size_t> indices_;
};

using HistoryPair = std::pair<History, History>;

// Outcome of a medium-decoherence check at history length k: decoherent iff
// every off-diagonal |D[h_a, h_b]| is at most tol. The diagonal holds the
// candidate probabilities of the histories that survived pruning.
struct DecoherenceReport {
  bool decoherent = true;
  int k = 0;
  double tol = kTolDecoherence;
  double max_offdiag = 0.0;
  std::optional<HistoryPair> worst_pair;
  std::map<History, double> diagonal;
  std::size_t num_branches = 0;

  bool operator==(const DecoherenceReport&) const = default;
};

inline constexpr std::size_t kDefaultBranchBudget = 1'000'000;

// Per-step branch-norm cutoff that keeps the total discarded contribution
// below tol / 10.
inline double prune_tolerance(double tol, int k) { return tol / (10.0 * k); }

// C_h = (U^dagger)^k P_{h_k} U ... P_{h_1} U.
ComplexMatrix chain_operator(const ComplexMatrix& u, const ProjectivePartition& p,
                             const History& h);

// B_h = P_{h_k} U ... P_{h_1} U, the chain operator without the (U^dagger)^k
// prefactor. Both give the same decoherence functional.
ComplexMatrix branch_operator(const ComplexMatrix& u, const ProjectivePartition& p,
                              const History& h);

// D[h_a, h_b] = Tr[B_a rho B_b^dagger]. rho may be any operator, the
// functional is linear in it.
Complex decoherence_functional(const ComplexMatrix& u, const ComplexMatrix& rho,
                               const ProjectivePartition& p, const History& ha,
                               const History& hb);

using BranchMap = std::map<History, ComplexVector>;

// B_h v for every history h of length k whose partial branch never drops to
// norm <= prune_tol. Throws kKTooLarge once more than budget branches
// survive.
BranchMap branch_vectors(const ComplexMatrix& u, const ProjectivePartition& p,
                         const ComplexVector& v, int k, double prune_tol,
                         std::size_t budget = kDefaultBranchBudget);

DecoherenceReport decoherence_check(const ComplexMatrix& u, const DensityOperator& rho,
                                    const ProjectivePartition& p, int k,
                                    double tol = kTolDecoherence,
                                    std::size_t budget = kDefaultBranchBudget);

// Decoherence for every classical initial state at once: D is linear in rho,
// so it suffices that each |mu,i><mu,j| element of classical_span_basis
// yields a vanishing off-diagonal. The diagonal is reported for the uniform
// classical state 1/d.
DecoherenceReport decoherence_check_all_classical(const ComplexMatrix& u,
                                                  const ProjectivePartition& p, int k,
                                                  double tol = kTolDecoherence,
                                                  std::size_t budget = kDefaultBranchBudget);

// Tr[P_ak U^(k-1) P_a1 U rho U^dagger P_b1 (U^dagger)^(k-1) P_bk]: the
// functional summed over all intermediate indices, evaluated from matrix
// powers. Requires k >= 2.
Complex endpoint_condition_check(const ComplexMatrix& u, const ProjectivePartition& p,
                                 int k, std::size_t alpha1, std::size_t beta1,
                                 std::size_t alphak, std::size_t betak,
                                 const ComplexMatrix& rho);

// Diagonal of the functional; throws kNotDecoherent when the set does not
// decohere at tol.
std::map<History, double> history_probabilities(const ComplexMatrix& u,
                                                const DensityOperator& rho,
                                                const ProjectivePartition& p, int k,
                                                double tol = kTolDecoherence);

}  // namespace decohist
