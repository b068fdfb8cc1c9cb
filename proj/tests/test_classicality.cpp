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
#include <cmath>

#include <gtest/gtest.h>

#include "decohist/classicality.hpp"
#include "decohist/examples.hpp"
#include "test_util.hpp"

namespace decohist {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

TEST(PreservesClassicality, IdentityGivesIdentityBlockMap) {
  for (const auto& p : {fine_partition(3), theorem2_system().partition}) {
    const auto r = preserves_classicality(ComplexMatrix::Identity(p.dim(), p.dim()), p);
    ASSERT_TRUE(r.preserved);
    ASSERT_TRUE(r.block_map.has_value());
    for (std::size_t mu = 0; mu < p.size(); ++mu) EXPECT_EQ((*r.block_map)[mu], mu);
    EXPECT_FALSE(r.witness.has_value());
  }
}

TEST(PreservesClassicality, Theorem2WitnessSplitsBlockZero) {
  const auto sys = theorem2_system();
  const auto r = preserves_classicality(sys.unitary, sys.partition);
  ASSERT_FALSE(r.preserved);
  EXPECT_FALSE(r.block_map.has_value());
  ASSERT_TRUE(r.witness.has_value());
  const auto& w = *r.witness;
  EXPECT_EQ(w.mu0, 0u);
  EXPECT_EQ(w.mu_prime, 0u);
  EXPECT_EQ(w.mu_dprime, 1u);
  EXPECT_NEAR(std::abs(w.c_prime), kInvSqrt2, 1e-12);
  EXPECT_NEAR(std::abs(w.c_dprime), kInvSqrt2, 1e-12);
  // The source is the superposition (|0,e0> + |0,e1>)/sqrt2 up to phases.
  EXPECT_NEAR(std::abs(w.source_vector(0)), kInvSqrt2, 1e-12);
  EXPECT_NEAR(std::abs(w.source_vector(1)), kInvSqrt2, 1e-12);
}

TEST(PreservesClassicality, ShiftHadamardWitness) {
  for (int K : {2, 3, 5}) {
    const auto sys = shift_hadamard_system(K);
    const auto r = preserves_classicality(sys.unitary, sys.partition);
    ASSERT_FALSE(r.preserved);
    const auto& w = *r.witness;
    EXPECT_EQ(w.mu0, 0u);
    EXPECT_EQ(w.mu_prime, 2u);
    EXPECT_EQ(w.mu_dprime, 3u);
    EXPECT_NEAR(std::abs(w.c_prime - kInvSqrt2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(w.c_dprime - kInvSqrt2), 0.0, 1e-15);
  }
}

TEST(ExtractWitness, ShiftHadamardK2Product) {
  const auto sys = shift_hadamard_system(2);
  const auto w = extract_witness(sys.unitary, sys.partition);
  EXPECT_EQ(w.mu0, 0u);
  EXPECT_NEAR(std::abs(w.c_prime * w.c_dprime), 0.5, 1e-15);
}

TEST(ExtractWitness, MonomialHasNone) {
  const ComplexMatrix u = random_monomial_unitary(4, 9);
  try {
    extract_witness(u, fine_partition(4));
    FAIL() << "expected NoWitness";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoWitness);
  }
}

TEST(ExtractWitness, CoarseEigenvalueBranch) {
  // Block {0,1} is rotated by a partial mixing into block {2}: the
  // compression has an eigenvalue strictly inside (0, 1).
  const double c = std::cos(0.4), s = std::sin(0.4);
  ComplexMatrix u = ComplexMatrix::Identity(3, 3);
  u(1, 1) = c;
  u(2, 1) = s;
  u(1, 2) = -s;
  u(2, 2) = c;
  const auto p = partition_from_blocks(3, {{0, 1}, {2}});
  const auto w = extract_witness(u, p);
  EXPECT_GT(std::abs(w.c_prime), kTolWitness);
  EXPECT_GT(std::abs(w.c_dprime), kTolWitness);
  EXPECT_NE(w.mu_prime, w.mu_dprime);
}

TEST(IsMonomial, Cases) {
  ComplexMatrix perm = ComplexMatrix::Zero(3, 3);
  perm(1, 0) = perm(2, 1) = perm(0, 2) = 1.0;
  EXPECT_TRUE(is_monomial(perm));
  const ComplexMatrix phased = testing::diag({std::polar(1.0, 0.3), std::polar(1.0, 2.0),
                                              std::polar(1.0, -1.1)}) * perm;
  EXPECT_TRUE(is_monomial(phased));
  EXPECT_FALSE(is_monomial(testing::hadamard()));
  EXPECT_THROW(is_monomial(testing::diag({1.0, 2.0})), Error);
}

// Fine-grained classicality preservation and monomiality coincide.
TEST(ClassicalityProperties, FinePreservationEqualsMonomial) {
  int disagreements = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int d = 2 + static_cast<int>(seed % 5);
    const auto p = fine_partition(d);
    for (const ComplexMatrix& u : {random_unitary(d, seed), random_monomial_unitary(d, seed)}) {
      if (preserves_classicality(u, p, 1e-8).preserved != is_monomial(u, 1e-8)) ++disagreements;
    }
  }
  EXPECT_EQ(disagreements, 0);
}

TEST(ClassicalityProperties, PreservedImpliesClassicalImages) {
  const std::vector<std::vector<int>> blocks{{0, 1}, {2, 3}, {4}};
  const auto p = partition_from_blocks(5, blocks);
  // Swap the two rank-2 blocks with a unitary mixing inside each.
  const ComplexMatrix inner = random_unitary(2, 4);
  ComplexMatrix u = ComplexMatrix::Zero(5, 5);
  u.block(2, 0, 2, 2) = inner;
  u.block(0, 2, 2, 2) = inner.adjoint();
  u(4, 4) = std::polar(1.0, 0.7);
  const auto r = preserves_classicality(u, p);
  ASSERT_TRUE(r.preserved);
  EXPECT_EQ(*r.block_map, (std::vector<std::size_t>{1, 0, 2}));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto rho = random_classical_state(p, seed);
    EXPECT_TRUE(is_classical(u * rho.matrix() * u.adjoint(), p, 1e-9));
  }
}

TEST(ClassicalityProperties, WitnessCertifiesNonPreservation) {
  std::vector<std::pair<ComplexMatrix, ProjectivePartition>> cases;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int d = 2 + static_cast<int>(seed % 5);
    cases.emplace_back(random_unitary(d, seed), fine_partition(d));
    cases.emplace_back(random_unitary(4, seed + 500), partition_from_blocks(4, {{0, 1}, {2, 3}}));
  }
  const auto sys = theorem2_system();
  cases.emplace_back(sys.unitary, sys.partition);
  for (const auto& [u, p] : cases) {
    const auto r = preserves_classicality(u, p);
    ASSERT_FALSE(r.preserved);
    const auto& w = *r.witness;
    const ComplexMatrix source = w.source_vector * w.source_vector.adjoint();
    EXPECT_TRUE(is_classical(source, p, 1e-9));
    EXPECT_FALSE(is_classical(u * source * u.adjoint(), p, 1e-9));
    EXPECT_NEAR((p.projector(w.mu0) * w.source_vector - w.source_vector).norm(), 0.0, 1e-10);
  }
}

TEST(ClassicalityProperties, BlockMapComposes) {
  const auto p = partition_from_blocks(6, {{0, 1}, {2, 3}, {4}, {5}});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ComplexMatrix u = ComplexMatrix::Zero(6, 6);
    // Random block permutation among equal ranks.
    const bool swap_big = seed % 2, swap_small = (seed / 2) % 2;
    const ComplexMatrix a = random_unitary(2, seed), b = random_unitary(2, seed + 100);
    u.block(swap_big ? 2 : 0, 0, 2, 2) = a;
    u.block(swap_big ? 0 : 2, 2, 2, 2) = b;
    u(swap_small ? 5 : 4, 4) = std::polar(1.0, 0.1 * static_cast<double>(seed));
    u(swap_small ? 4 : 5, 5) = 1.0;
    const auto f = *preserves_classicality(u, p).block_map;
    const auto f2 = *preserves_classicality(u * u, p).block_map;
    for (std::size_t mu = 0; mu < p.size(); ++mu) EXPECT_EQ(f2[mu], f[f[mu]]);
  }
}

TEST(PreservesClassicality, Errors) {
  try {
    preserves_classicality(ComplexMatrix::Identity(3, 3), fine_partition(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
  try {
    preserves_classicality(testing::diag({1.0, 2.0}), fine_partition(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotUnitary);
  }
}

}  // namespace
}  // namespace decohist
