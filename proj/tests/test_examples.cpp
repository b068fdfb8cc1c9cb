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
#include "decohist/histories.hpp"

namespace decohist {
namespace {

TEST(ShiftHadamard, K2Matrix) {
  const auto sys = shift_hadamard_system(2);
  const double h = 1.0 / std::sqrt(2.0);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(2, 0) = h;
  expected(3, 0) = h;
  expected(2, 1) = h;
  expected(3, 1) = -h;
  expected(0, 2) = 1.0;
  expected(1, 3) = 1.0;
  EXPECT_EQ((sys.unitary - expected).norm(), 0.0);
  EXPECT_TRUE(validate_unitary(sys.unitary, kTolUnitary));
  EXPECT_TRUE(is_fine_grained(sys.partition));
  EXPECT_EQ(sys.notes.at("decoherent_up_to"), "2");
}

TEST(ShiftHadamard, K3Shape) {
  const auto sys = shift_hadamard_system(3);
  EXPECT_EQ(sys.unitary.rows(), 6);
  EXPECT_EQ((sys.unitary.col(4) - ComplexVector::Unit(6, 0)).norm(), 0.0);
  EXPECT_TRUE(validate_unitary(sys.unitary, kTolUnitary));
}

TEST(ShiftHadamard, NeverMonomial) {
  for (int K = 2; K <= 32; ++K) EXPECT_FALSE(is_monomial(shift_hadamard_system(K).unitary));
}

TEST(ShiftHadamard, InvalidK) {
  for (int K : {1, 0, -3, 33}) {
    try {
      shift_hadamard_system(K);
      FAIL() << K;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidK);
    }
  }
}

TEST(ShiftHadamard, BoundaryAtK) {
  for (int K = 2; K <= 4; ++K) {
    const auto sys = shift_hadamard_system(K);
    for (int k = 1; k <= K; ++k) {
      EXPECT_TRUE(decoherence_check_all_classical(sys.unitary, sys.partition, k).decoherent)
          << "K=" << K << " k=" << k;
    }
    const auto rho = DensityOperator::pure(ComplexVector::Unit(2 * K, 0));
    EXPECT_FALSE(decoherence_check(sys.unitary, rho, sys.partition, K + 1).decoherent);
  }
}

TEST(Theorem2, TableAndCompactAgree) {
  EXPECT_EQ((theorem2_unitary_table() - theorem2_unitary_compact()).norm(), 0.0);
  const auto sys = theorem2_system();
  EXPECT_EQ(sys.unitary(2, 1), Complex(1.0));
  EXPECT_FALSE(is_fine_grained(sys.partition));
  EXPECT_EQ(sys.partition.ranks(), (std::vector<int>{2, 2}));
  const ComplexMatrix u4 = matrix_power(sys.unitary, 4);
  EXPECT_EQ((u4 - ComplexMatrix::Identity(4, 4)).norm(), 0.0);
}

TEST(RandomUnitary, ValidAndDeterministic) {
  for (int d = 2; d <= 8; ++d) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const ComplexMatrix a = random_unitary(d, seed);
      EXPECT_TRUE(validate_unitary(a, 1e-10));
      EXPECT_EQ(a, random_unitary(d, seed));
    }
  }
  EXPECT_NE(random_unitary(3, 1), random_unitary(3, 2));
}

TEST(RandomUnitary, NeverMonomialInTwoDimensions) {
  int monomial = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    if (is_monomial(random_unitary(2, seed))) ++monomial;
  }
  EXPECT_EQ(monomial, 0);
}

TEST(RandomUnitary, RejectsDimension) {
  EXPECT_THROW(random_unitary(1, 0), Error);
  EXPECT_THROW(random_unitary(65, 0), Error);
  EXPECT_THROW(random_monomial_unitary(1, 0), Error);
}

TEST(RandomMonomial, Properties) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ComplexMatrix a = random_monomial_unitary(4, seed);
    const ComplexMatrix b = random_monomial_unitary(4, seed + 100);
    EXPECT_TRUE(is_monomial(a));
    EXPECT_TRUE(is_monomial(a * b));
    EXPECT_TRUE(preserves_classicality(a, fine_partition(4)).preserved);
    EXPECT_TRUE(decoherence_check_all_classical(a, fine_partition(4), 5).decoherent);
  }
}

}  // namespace
}  // namespace decohist
