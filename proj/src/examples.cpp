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
#include "decohist/examples.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <Eigen/QR>

namespace decohist {
namespace {

void require_random_dim(int d) {
  if (d < 2 || d > kMaxDim) {
    throw Error(ErrorCode::kInvalidArgument,
                "random generators need 2 <= d <= " + std::to_string(kMaxDim));
  }
}

int ket(int mu, int lambda) { return 2 * mu + lambda; }

}  // namespace

NamedSystem shift_hadamard_system(int K) {
  if (K < 2 || 2 * K > kMaxDim) {
    throw Error(ErrorCode::kInvalidK,
                "shift-Hadamard system needs 2 <= K <= " + std::to_string(kMaxDim / 2) +
                    ", got " + std::to_string(K));
  }
  const int d = 2 * K;
  const double h = 1.0 / std::numbers::sqrt2;
  ComplexMatrix u = ComplexMatrix::Zero(d, d);
  u(2, 0) = h;
  u(3, 0) = h;
  u(2, 1) = h;
  u(3, 1) = -h;
  for (int nu = 2; nu <= d - 3; ++nu) u(nu + 2, nu) = 1.0;
  u(0, d - 2) = 1.0;
  u(1, d - 1) = 1.0;

  NamedSystem sys{"shift-hadamard", std::move(u), fine_partition(d), {}};
  sys.notes["K"] = std::to_string(K);
  sys.notes["decoherent_up_to"] = std::to_string(K);
  sys.notes["preserves_classicality"] = "false";
  return sys;
}

ComplexMatrix theorem2_unitary_table() {
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  u(ket(0, 1), ket(0, 0)) = 1.0;
  u(ket(1, 0), ket(0, 1)) = 1.0;
  u(ket(1, 1), ket(1, 0)) = 1.0;
  u(ket(0, 0), ket(1, 1)) = 1.0;
  return u;
}

ComplexMatrix theorem2_unitary_compact() {
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  for (int mu = 0; mu < 2; ++mu) {
    for (int lambda = 0; lambda < 2; ++lambda) {
      for (int nu = 0; nu < 2; ++nu) {
        if (nu != lambda) continue;
        u(ket((mu + nu) % 2, (1 + nu) % 2), ket(mu, lambda)) += 1.0;
      }
    }
  }
  return u;
}

NamedSystem theorem2_system() {
  ComplexMatrix u = theorem2_unitary_table();
  if (u != theorem2_unitary_compact()) {
    throw Error(ErrorCode::kInvalidArgument, "4-cycle table and compact form disagree");
  }
  NamedSystem sys{"theorem2", std::move(u), partition_from_blocks(4, {{0, 1}, {2, 3}}), {}};
  sys.notes["decoherent_up_to"] = "unbounded";
  sys.notes["preserves_classicality"] = "false";
  sys.notes["period"] = "4";
  return sys;
}

ComplexMatrix random_unitary(int d, std::uint64_t seed) {
  require_random_dim(d);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (int c = 0; c < d; ++c) {
    for (int r = 0; r < d; ++r) g(r, c) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int c = 0; c < d; ++c) {
    const Complex diag = r(c, c);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(c) *= diag / mag;
  }
  return q;
}

ComplexMatrix random_monomial_unitary(int d, std::uint64_t seed) {
  require_random_dim(d);
  std::mt19937_64 rng(seed);
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  ComplexMatrix u = ComplexMatrix::Zero(d, d);
  for (int c = 0; c < d; ++c) u(perm[static_cast<std::size_t>(c)], c) = std::polar(1.0, angle(rng));
  return u;
}

}  // namespace decohist
