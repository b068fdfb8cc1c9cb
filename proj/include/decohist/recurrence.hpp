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

#include "decohist/classicality.hpp"
#include "decohist/linalg.hpp"
#include "decohist/partitions.hpp"

namespace decohist {

inline constexpr long long kDefaultQMax = 1'000'000;

// A step q with ||U^q - 1|| = norm < epsilon. phase_residuals[j] is the
// distance from q * phase_j to the nearest integer.
struct RecurrenceResult {
  long long q = 0;
  double norm = 0.0;
  double epsilon = 0.0;
  std::vector<double> phase_residuals;

  bool operator==(const RecurrenceResult&) const = default;
};

// Raised when no q <= q_max recurs within epsilon; carries the best
// candidate seen (smallest norm, then smallest q).
class RecurrenceNotFound : public Error {
 public:
  RecurrenceNotFound(long long q_max, long long best_q, double best_norm);

  long long q_max() const { return q_max_; }
  long long best_q() const { return best_q_; }
  double best_norm() const { return best_norm_; }

 private:
  long long q_max_;
  long long best_q_;
  double best_norm_;
};

// Distance from q * phase to the nearest integer.
double phase_residual(double phase, long long q);

// ||U^q - 1|| = max_j |exp(2 pi i q xi_j) - 1| = 2 max_j sin(pi r_j), from
// the spectrum alone.
double recurrence_norm(const UnitarySpectrum& spectrum, long long q);
double recurrence_norm(const ComplexMatrix& u, long long q);

// Smallest q in [1, q_max] with recurrence_norm < epsilon. The scan only
// touches the eigenphases, O(d) per candidate.
RecurrenceResult find_recurrence(const ComplexMatrix& u, double epsilon,
                                 long long q_max = kDefaultQMax);
// Same scan over [q_min, q_max] on a precomputed spectrum.
RecurrenceResult find_recurrence(const UnitarySpectrum& spectrum, double epsilon,
                                 long long q_max, long long q_min = 1);

// Per-phase accuracy eps' = eps / (d (e^{2 pi} - 1)) that makes the power
// series estimate d * eps' * (e^{2 pi} - 1) equal eps.
double dirichlet_epsilon_prime(double epsilon, int dim);
double series_norm_bound(double epsilon_prime, int dim);

// Slack between the certified off-diagonal and |c' c''|^2 when
// ||U^(q-1) - U^dagger|| < epsilon: each of the two amplitude factors moves
// by less than epsilon, so the product moves by at most 2 eps + eps^2,
// which 4 eps + eps^2 bounds.
inline double certificate_slack(double epsilon) { return 4.0 * epsilon + epsilon * epsilon; }

// Constructive non-decoherence for a fine-grained partition and a unitary
// that does not preserve classicality. From a witness (mu0, mu', mu'', c',
// c'') and a recurrence q >= 2, the endpoint expression
//   Tr[P_mu0 U^(q-1) P_mu' U rho0 U^dagger P_mu'' (U^dagger)^(q-1) P_mu0]
// with rho0 = |mu0><mu0| must vanish for decoherent histories but is within
// certificate_slack(epsilon) of |c' c''|^2.
struct ViolationCertificate {
  NonClassicalityWitness witness;
  long long q = 0;
  double epsilon = 0.0;
  double recurrence_norm = 0.0;
  Complex endpoint_value;
  double offdiag_magnitude = 0.0;
  double predicted_floor = 0.0;
  double slack = 0.0;
  // Smallest k in [2, q] at which the endpoint expression with
  // alpha_k = beta_k = k_used_endpoint exceeds predicted_floor / 2, if any.
  std::optional<long long> k_used;
  std::size_t k_used_endpoint = 0;
  double k_used_magnitude = 0.0;

  bool operator==(const ViolationCertificate&) const = default;
};

ViolationCertificate certify_violation(const ComplexMatrix& u,
                                       const ProjectivePartition& p, double epsilon,
                                       long long q_max = kDefaultQMax);

}  // namespace decohist
