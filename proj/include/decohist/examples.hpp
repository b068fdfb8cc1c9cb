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
#include <map>
#include <string>

#include "decohist/linalg.hpp"
#include "decohist/partitions.hpp"

namespace decohist {

struct NamedSystem {
  std::string name;
  ComplexMatrix unitary;
  ProjectivePartition partition;
  // Documented expected properties, e.g. {"decoherent_up_to", "3"}.
  std::map<std::string, std::string> notes;
};

// d = 2K, fine-grained computational partition:
//   |0> -> (|2> + |3>)/sqrt2,  |1> -> (|2> - |3>)/sqrt2,
//   |nu> -> |nu + 2> for 2 <= nu <= d - 3,
//   |d-2> -> |0>,  |d-1> -> |1>.
// Histories decohere for every classical state up to length K and not
// beyond. K < 2 throws kInvalidK.
NamedSystem shift_hadamard_system(int K);

// Two qubits, basis order (|0,e0>, |0,e1>, |1,e0>, |1,e1>), partition
// {|mu><mu| (x) 1}, and the 4-cycle
//   |0,e0> -> |0,e1> -> |1,e0> -> |1,e1> -> |0,e0>.
// Classicality is not preserved, yet histories of every length decohere.
NamedSystem theorem2_system();

// The 4-cycle above, one column per basis state.
ComplexMatrix theorem2_unitary_table();
// Same map from U|mu,e_l> = |mu + l, e_(1 + l)> (indices mod 2).
ComplexMatrix theorem2_unitary_compact();

// Haar-random unitary: QR of a seeded complex Gaussian matrix with the
// diagonal of R made real positive. Deterministic in (d, seed).
ComplexMatrix random_unitary(int d, std::uint64_t seed);

// Seeded random permutation times seeded random diagonal phases.
ComplexMatrix random_monomial_unitary(int d, std::uint64_t seed);

}  // namespace decohist
