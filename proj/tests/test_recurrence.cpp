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
#include <numbers>

#include <gtest/gtest.h>

#include "decohist/examples.hpp"
#include "decohist/histories.hpp"
#include "decohist/recurrence.hpp"
#include "test_util.hpp"

namespace decohist {
namespace {

using testing::diag;

ComplexMatrix phase_gate(double xi) {
  return diag({std::polar(1.0, 2.0 * std::numbers::pi * xi)});
}

double dense_norm(const ComplexMatrix& u, long long q) {
  const auto d = u.rows();
  return operator_norm(matrix_power(u, q) - ComplexMatrix::Identity(d, d));
}

TEST(RecurrenceNorm, ExactPeriods) {
  EXPECT_NEAR(recurrence_norm(diag({1.0, Complex(0.0, 1.0)}), 4), 0.0, 1e-12);
  EXPECT_NEAR(recurrence_norm(theorem2_unitary_table(), 4), 0.0, 1e-12);
  EXPECT_NEAR(dense_norm(theorem2_unitary_table(), 4), 0.0, 1e-12);
  EXPECT_NEAR(recurrence_norm(diag({1.0, Complex(0.0, 1.0)}), 2), 2.0, 1e-12);
}

TEST(RecurrenceNorm, QOneMatchesOperatorNorm) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int d = 2 + static_cast<int>(seed % 5);
    const ComplexMatrix u = random_unitary(d, seed);
    EXPECT_NEAR(recurrence_norm(u, 1), operator_norm(u - ComplexMatrix::Identity(d, d)), 1e-9);
  }
}

TEST(RecurrenceNorm, MatchesDensePowering) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ComplexMatrix u = random_unitary(3, seed);
    for (long long q : {2LL, 7LL, 100LL, 9999LL}) {
      EXPECT_NEAR(recurrence_norm(u, q), dense_norm(u, q), 1e-9);
    }
  }
}

TEST(RecurrenceNorm, Errors) {
  EXPECT_THROW(recurrence_norm(diag({1.0, 2.0}), 1), Error);
  EXPECT_THROW(recurrence_norm(ComplexMatrix::Identity(2, 2), 0), Error);
}

TEST(PhaseResidual, NearestInteger) {
  EXPECT_NEAR(phase_residual(0.3, 10), 0.0, 1e-12);
  EXPECT_NEAR(phase_residual(0.3, 1), 0.3, 1e-15);
  EXPECT_NEAR(phase_residual(0.75, 1), 0.25, 1e-15);
}

TEST(FindRecurrence, RationalPhase) {
  const auto r = find_recurrence(phase_gate(0.3), 1e-12);
  EXPECT_EQ(r.q, 10);
  EXPECT_NEAR(r.norm, 0.0, 1e-12);
  ASSERT_EQ(r.phase_residuals.size(), 1u);
}

TEST(FindRecurrence, Theorem2) {
  const auto sys = theorem2_system();
  const auto r = find_recurrence(sys.unitary, 1e-12);
  EXPECT_EQ(r.q, 4);
  EXPECT_NEAR(r.norm, 0.0, 1e-12);
}

TEST(FindRecurrence, GoldenRatioGivesFibonacci) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const ComplexMatrix u = phase_gate(phi);
  const auto r = find_recurrence(u, 0.05, 100000);
  long long oracle = 0;
  for (long long q = 1; q <= 100000; ++q) {
    const double x = static_cast<double>(q) * phi;
    if (2.0 * std::abs(std::sin(std::numbers::pi * (x - std::round(x)))) < 0.05) {
      oracle = q;
      break;
    }
  }
  EXPECT_EQ(r.q, oracle);
  EXPECT_LT(r.norm, 0.05);
  bool fibonacci = false;
  for (long long a = 1, b = 1; a <= r.q; std::tie(a, b) = std::pair(b, a + b)) {
    if (a == r.q) fibonacci = true;
  }
  EXPECT_TRUE(fibonacci) << r.q;
}

TEST(FindRecurrence, ReportsBestOnFailure) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  try {
    find_recurrence(phase_gate(phi), 1e-9, 50);
    FAIL();
  } catch (const RecurrenceNotFound& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFound);
    EXPECT_EQ(e.q_max(), 50);
    EXPECT_NEAR(e.best_norm(), recurrence_norm(phase_gate(phi), e.best_q()), 1e-12);
    EXPECT_EQ(e.best_q(), 34);
  }
}

TEST(FindRecurrence, RejectsBadEpsilon) {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  for (double eps : {0.0, -1.0, 2.0, 2.5}) {
    try {
      find_recurrence(id, eps);
      FAIL() << eps;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    }
  }
}

TEST(FindRecurrence, SoundnessAndSeriesBound) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int d = 2 + static_cast<int>(seed % 2);
    const ComplexMatrix u = random_unitary(d, seed);
    const auto r = find_recurrence(u, 0.2, 1000000);
    EXPECT_LT(r.norm, 0.2);
    double worst = 0.0;
    for (double res : r.phase_residuals) worst = std::max(worst, res);
    EXPECT_NEAR(r.norm, 2.0 * std::sin(std::numbers::pi * worst), 1e-9);
    EXPECT_LE(r.norm, series_norm_bound(worst, d) + 1e-15);
    if (r.q <= 10000) {
      EXPECT_NEAR(dense_norm(u, r.q), r.norm, 1e-9);
    }
    // Smallest qualifying q.
    for (long long q = 1; q < std::min<long long>(r.q, 2000); ++q) {
      ASSERT_GE(recurrence_norm(u, q), 0.2);
    }
  }
}

TEST(SeriesBound, RoundTrip) {
  for (int d = 1; d <= 6; ++d) {
    EXPECT_NEAR(series_norm_bound(dirichlet_epsilon_prime(0.1, d), d), 0.1, 1e-15);
  }
  EXPECT_DOUBLE_EQ(certificate_slack(1e-3), 4e-3 + 1e-6);
}

TEST(CertifyViolation, ShiftHadamardK2) {
  const auto sys = shift_hadamard_system(2);
  const auto c = certify_violation(sys.unitary, sys.partition, 1e-3);
  EXPECT_EQ(c.q, 4);
  EXPECT_NEAR(c.predicted_floor, 0.25, 1e-14);
  EXPECT_GE(c.offdiag_magnitude, c.predicted_floor - c.slack);
  ASSERT_TRUE(c.k_used.has_value());
  EXPECT_EQ(*c.k_used, 3);
  EXPECT_NEAR(c.k_used_magnitude, 0.25, 1e-12);
}

TEST(CertifyViolation, ShiftHadamardK3) {
  const auto sys = shift_hadamard_system(3);
  const auto c = certify_violation(sys.unitary, sys.partition, 1e-3);
  EXPECT_NEAR(c.predicted_floor, 0.25, 1e-14);
  ASSERT_TRUE(c.k_used.has_value());
  EXPECT_EQ(*c.k_used, 4);
}

TEST(CertifyViolation, MatchesSummedFunctional) {
  const auto sys = shift_hadamard_system(2);
  const auto c = certify_violation(sys.unitary, sys.partition, 1e-3);
  const auto& w = c.witness;
  const ComplexVector v0 = ComplexVector::Unit(4, static_cast<Eigen::Index>(w.mu0));
  const ComplexMatrix rho0 = v0 * v0.adjoint();
  Complex summed = 0.0;
  const auto mids = testing::all_histories(4, static_cast<int>(c.q) - 2);
  for (const auto& ma : mids) {
    for (const auto& mb : mids) {
      std::vector<std::size_t> a{w.mu_prime}, b{w.mu_dprime};
      a.insert(a.end(), ma.indices().begin(), ma.indices().end());
      b.insert(b.end(), mb.indices().begin(), mb.indices().end());
      a.push_back(w.mu0);
      b.push_back(w.mu0);
      summed += testing::literal_functional(sys.unitary, rho0, sys.partition, History(a),
                                            History(b));
    }
  }
  EXPECT_NEAR(std::abs(summed), c.offdiag_magnitude, 1e-9);
  EXPECT_NEAR(std::abs(summed - c.endpoint_value), 0.0, 1e-9);
}

TEST(CertifyViolation, Guards) {
  const auto sys = theorem2_system();
  try {
    certify_violation(sys.unitary, sys.partition, 1e-3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPartitionNotFineGrained);
  }
  try {
    certify_violation(random_monomial_unitary(3, 1), fine_partition(3), 1e-3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoWitness);
  }
}

TEST(CertifyViolation, RandomTwoDimensional) {
  int certified = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const ComplexMatrix u = random_unitary(2, seed);
    try {
      const auto c = certify_violation(u, fine_partition(2), 1e-2);
      EXPECT_GT(c.offdiag_magnitude, 0.0);
      EXPECT_GE(c.offdiag_magnitude, c.predicted_floor - c.slack);
      ++certified;
    } catch (const RecurrenceNotFound&) {
    }
  }
  EXPECT_GT(certified, 0);
}

}  // namespace
}  // namespace decohist
