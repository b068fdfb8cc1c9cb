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
#include "decohist/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "decohist/histories.hpp"
#include "decohist/parallel.hpp"

namespace decohist {
namespace {

constexpr long long kScanBlock = 1 << 16;

std::string not_found_message(long long q_max, long long best_q, double best_norm) {
  std::ostringstream os;
  os.precision(17);
  os << "no q <= " << q_max << " recurs within epsilon; best q = " << best_q
     << " with norm " << best_norm;
  return os.str();
}

double norm_from_residual(double r) { return 2.0 * std::sin(std::numbers::pi * r); }

double scan_norm(const std::vector<double>& phases, long long q) {
  double worst = 0.0;
  for (double xi : phases) worst = std::max(worst, phase_residual(xi, q));
  return norm_from_residual(worst);
}

struct ScanOutcome {
  long long hit = 0;  // 0 when none
  long long best_q = 0;
  double best_norm = std::numeric_limits<double>::infinity();
};

void scan_range(const std::vector<double>& phases, double epsilon, long long lo,
                long long hi, ScanOutcome& out) {
  for (long long q = lo; q < hi; ++q) {
    const double n = scan_norm(phases, q);
    if (n < out.best_norm) {
      out.best_norm = n;
      out.best_q = q;
    }
    if (n < epsilon) {
      out.hit = q;
      return;
    }
  }
}

}  // namespace

RecurrenceNotFound::RecurrenceNotFound(long long q_max, long long best_q,
                                       double best_norm)
    : Error(ErrorCode::kNotFound, not_found_message(q_max, best_q, best_norm)),
      q_max_(q_max),
      best_q_(best_q),
      best_norm_(best_norm) {}

double phase_residual(double phase, long long q) {
  const double x = static_cast<double>(q) * phase;
  return std::abs(x - std::nearbyint(x));
}

double recurrence_norm(const UnitarySpectrum& spectrum, long long q) {
  if (q < 1) throw Error(ErrorCode::kInvalidArgument, "q must be positive");
  return scan_norm(spectrum.phases, q);
}

double recurrence_norm(const ComplexMatrix& u, long long q) {
  return recurrence_norm(unitary_spectrum(u), q);
}

RecurrenceResult find_recurrence(const ComplexMatrix& u, double epsilon, long long q_max) {
  if (!(epsilon > 0.0 && epsilon < 2.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in (0, 2)");
  }
  return find_recurrence(unitary_spectrum(u), epsilon, q_max);
}

RecurrenceResult find_recurrence(const UnitarySpectrum& spectrum, double epsilon,
                                 long long q_max, long long q_min) {
  if (!(epsilon > 0.0 && epsilon < 2.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in (0, 2)");
  }
  if (q_max < 1 || q_min < 1) {
    throw Error(ErrorCode::kInvalidArgument, "q bounds must be positive");
  }
  const auto& phases = spectrum.phases;
  const std::size_t workers = worker_count();

  ScanOutcome overall;
  for (long long lo = q_min; lo <= q_max; lo += kScanBlock) {
    const long long hi = std::min(q_max + 1, lo + kScanBlock);
    const long long span = hi - lo;
    const long long parts = std::min<long long>(static_cast<long long>(workers), span);
    std::vector<ScanOutcome> outcomes(static_cast<std::size_t>(parts));
    parallel_for(outcomes.size(), [&](std::size_t w) {
      const long long a = lo + span * static_cast<long long>(w) / parts;
      const long long b = lo + span * static_cast<long long>(w + 1) / parts;
      scan_range(phases, epsilon, a, b, outcomes[w]);
    });
    // Sub-ranges are ordered, so the first one with a hit holds the minimum.
    for (const auto& o : outcomes) {
      if (o.best_norm < overall.best_norm ||
          (o.best_norm == overall.best_norm && o.best_q < overall.best_q)) {
        overall.best_norm = o.best_norm;
        overall.best_q = o.best_q;
      }
      if (o.hit) {
        RecurrenceResult result;
        result.q = o.hit;
        result.epsilon = epsilon;
        for (double xi : phases) result.phase_residuals.push_back(phase_residual(xi, o.hit));
        result.norm = scan_norm(phases, o.hit);
        return result;
      }
    }
  }
  throw RecurrenceNotFound(q_max, overall.best_q, overall.best_norm);
}

double dirichlet_epsilon_prime(double epsilon, int dim) {
  return epsilon / (dim * (std::exp(2.0 * std::numbers::pi) - 1.0));
}

double series_norm_bound(double epsilon_prime, int dim) {
  return dim * epsilon_prime * (std::exp(2.0 * std::numbers::pi) - 1.0);
}

ViolationCertificate certify_violation(const ComplexMatrix& u,
                                       const ProjectivePartition& p, double epsilon,
                                       long long q_max) {
  require_unitary(u);
  if (u.rows() != p.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "unitary and partition dimensions differ");
  }
  if (!is_fine_grained(p)) {
    throw Error(ErrorCode::kPartitionNotFineGrained,
                "violation certificates need rank-one projectors");
  }
  const PreservationReport preservation = preserves_classicality(u, p);
  if (preservation.preserved) {
    throw Error(ErrorCode::kNoWitness, "unitary preserves classicality");
  }

  ViolationCertificate cert;
  cert.witness = *preservation.witness;
  cert.epsilon = epsilon;
  const auto& w = cert.witness;

  // k = q >= 2 so that U^(k-1) ~ U^dagger is a genuine power.
  const RecurrenceResult rec = find_recurrence(unitary_spectrum(u), epsilon, q_max, 2);
  cert.q = rec.q;
  cert.recurrence_norm = rec.norm;

  const ComplexVector source = p.basis_vector(static_cast<int>(w.mu0));
  const ComplexMatrix rho0 = source * source.adjoint();
  cert.endpoint_value = endpoint_condition_check(
      u, p, static_cast<int>(rec.q), w.mu_prime, w.mu_dprime, w.mu0, w.mu0, rho0);
  cert.offdiag_magnitude = std::abs(cert.endpoint_value);
  cert.predicted_floor = std::norm(w.c_prime * w.c_dprime);
  cert.slack = certificate_slack(epsilon);
  if (!(cert.offdiag_magnitude > 0.0) ||
      cert.offdiag_magnitude < cert.predicted_floor - cert.slack) {
    throw Error(ErrorCode::kCertificateFailed,
                "endpoint magnitude " + std::to_string(cert.offdiag_magnitude) +
                    " below predicted floor minus slack");
  }

  // Endpoint expression for every common final index nu at once:
  //   c' conj(c'') <nu|U^(k-1)|mu'> conj(<nu|U^(k-1)|mu''>).
  const int dim = p.dim();
  ComplexMatrix basis(dim, dim);
  for (int i = 0; i < dim; ++i) basis.col(i) = p.basis_vector(i);
  const ComplexMatrix w_basis = basis.adjoint() * u * basis;
  ComplexVector a = ComplexVector::Unit(dim, static_cast<Eigen::Index>(w.mu_prime));
  ComplexVector b = ComplexVector::Unit(dim, static_cast<Eigen::Index>(w.mu_dprime));
  const Complex amp = w.c_prime * std::conj(w.c_dprime);
  for (long long k = 2; k <= rec.q; ++k) {
    a = w_basis * a;
    b = w_basis * b;
    for (int nu = 0; nu < dim; ++nu) {
      const double mag = std::abs(amp * a(nu) * std::conj(b(nu)));
      if (mag > cert.predicted_floor / 2.0) {
        cert.k_used = k;
        cert.k_used_endpoint = static_cast<std::size_t>(nu);
        cert.k_used_magnitude = mag;
        return cert;
      }
    }
  }
  return cert;
}

}  // namespace decohist
