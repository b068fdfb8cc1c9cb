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

#include <optional>
#include <vector>

#include "decohist/linalg.hpp"
#include "decohist/partitions.hpp"

namespace decohist {

// A classical pure state whose image under U is spread across two distinct
// blocks: source_vector lies in supp(P_mu0), and c_prime / c_dprime are the
// overlaps of U * source_vector with supp(P_mu_prime) / supp(P_mu_dprime).
// For fine-grained partitions these are the matrix elements of U in the
// partition basis; for coarse ones they are the (real, positive) norms of
// the projected images.
struct NonClassicalityWitness {
  std::size_t mu0 = 0;
  ComplexVector source_vector;
  std::size_t mu_prime = 0;
  std::size_t mu_dprime = 0;
  Complex c_prime;
  Complex c_dprime;

  bool operator==(const NonClassicalityWitness&) const = default;
};

struct PreservationReport {
  bool preserved = false;
  // U P_mu U^dagger = P_{block_map[mu]}.
  std::optional<std::vector<std::size_t>> block_map;
  std::optional<NonClassicalityWitness> witness;

  bool operator==(const PreservationReport&) const = default;
};

// Decides whether U maps every classical state to a classical state by
// checking that conjugation by U permutes the projectors. Pure classical
// states are exactly the pure states inside one block, so preservation
// holds iff each block is carried into a single block; unitarity and
// dimension counting then force a rank-preserving permutation.
PreservationReport preserves_classicality(const ComplexMatrix& u,
                                          const ProjectivePartition& p,
                                          double tol = kTolWitness);

// Generalized permutation matrix test: exactly one entry per column above
// tol, and that entry has unit modulus within tol.
bool is_monomial(const ComplexMatrix& u, double tol = kTolWitness);

// Throws kNoWitness when U preserves classicality.
NonClassicalityWitness extract_witness(const ComplexMatrix& u,
                                       const ProjectivePartition& p,
                                       double tol = kTolWitness);

}  // namespace decohist
