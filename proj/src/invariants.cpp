// Copyright 2026 The nmimo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nmimo/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <fmt/format.h>

#include "nmimo/bounds.hpp"
#include "nmimo/channel.hpp"
#include "nmimo/link.hpp"
#include "nmimo/precoding.hpp"

namespace nmimo {

namespace {

constexpr std::uint64_t kSuiteSeed = 20121203;

CheckResult power_constraint() {
  std::mt19937_64 rng(kSuiteSeed);
  std::uniform_int_distribution<int> dim(1, 32);
  double worst = 0.0;
  for (int draw = 0; draw < 200; ++draw) {
    const int m = dim(rng);
    const int k = std::uniform_int_distribution<int>(1, m)(rng);
    const auto h = generate_channel(k, m, kSuiteSeed, {static_cast<std::uint64_t>(draw), 0});
    for (auto scheme : {kZfVector, kZfMatrix, kMfVector, kMfMatrix}) {
      const auto g = build_precoder(h, scheme);
      worst = std::max(worst, std::abs(g.columns.squaredNorm() - 1.0));
      if (scheme.normalization == Normalization::Vector) {
        for (Eigen::Index c = 0; c < g.columns.cols(); ++c)
          worst = std::max(worst, std::abs(g.columns.col(c).squaredNorm() - 1.0 / k));
      }
    }
  }
  return {"power constraint", worst < 1e-12, fmt::format("max deviation {:.3e}", worst)};
}

CheckResult zf_orthogonality() {
  std::mt19937_64 rng(kSuiteSeed + 1);
  double worst = 0.0;
  for (int draw = 0; draw < 200; ++draw) {
    const int m = std::uniform_int_distribution<int>(1, 32)(rng);
    const int k = std::uniform_int_distribution<int>(1, m)(rng);
    const auto h = generate_channel(k, m, kSuiteSeed + 1, {static_cast<std::uint64_t>(draw), 0});
    for (auto scheme : {kZfVector, kZfMatrix}) {
      const auto r = compute_sinr(h, build_precoder(h, scheme), 1.0);
      worst = std::max(worst, *std::max_element(r.interference_power.begin(), r.interference_power.end()));
    }
  }
  return {"zf orthogonality", worst < 1e-9, fmt::format("max interference {:.3e}", worst)};
}

CheckResult mf_bounds_coincide() {
  std::mt19937_64 rng(kSuiteSeed + 2);
  bool same = true;
  for (int i = 0; i < 1000; ++i) {
    const double m = std::uniform_int_distribution<int>(1, 256)(rng);
    const double k = std::uniform_int_distribution<int>(1, 256)(rng);
    const double p = std::pow(10.0, std::uniform_real_distribution<double>(-3.0, 3.0)(rng));
    same = same && bounds::mf_matrix_lower(m, k, p) == bounds::mf_vector_upper(m, k, p);
  }
  return {"mf bounds identical", same, "1000 random (M, K, P)"};
}

CheckResult zf_gap_identity() {
  double worst = 0.0;
  bool non_negative = true;
  for (int m = 2; m <= 64; ++m) {
    for (int k = 1; k < m; ++k) {
      for (double p : {0.01, 0.316, 1.0, 10.0}) {
        const double gap = bounds::zf_vector_lower(m, k, p) - bounds::zf_matrix_upper(m, k, p);
        const double closed = std::log2(1.0 + p / (k + p * (m - k)));
        worst = std::max(worst, std::abs(gap - closed));
        non_negative = non_negative && gap >= 0.0;
      }
    }
  }
  return {"zf normalization gap", non_negative && worst < 1e-12, fmt::format("max identity error {:.3e}", worst)};
}

CheckResult crossing_point() {
  const auto cp = bounds::kcross_exact(24, 1.0);
  const auto roots = bounds::crossing_quadratic_roots(24, 1.0);
  bool ok = cp.exists && roots && cp.k_lower_root;
  double residual = 0.0;
  if (ok) {
    residual = std::abs(bounds::zf_vector_lower(24, *cp.k_exact, 1.0) - bounds::mf_matrix_lower(24, *cp.k_exact, 1.0));
    ok = residual < 1e-9 && std::abs(*cp.k_exact - roots->upper) < 1e-9 && std::abs(*cp.k_lower_root - roots->lower) < 1e-9;
  }
  const auto shifted = bounds::kcross_exact(24, db_to_linear(-5.0));
  ok = ok && shifted.k_exact && *shifted.k_exact < *cp.k_exact;
  return {"crossing point", ok, fmt::format("k_exact(0 dB) {:.6f}, residual {:.3e}", cp.k_exact.value_or(NAN), residual)};
}

CheckResult determinism(Workers workers) {
  SystemConfig cfg;
  cfg.num_users = 6;
  cfg.trials = 200;
  cfg.seed = kSuiteSeed;
  bool same = true;
  for (auto scheme : {kZfVector, kMfMatrix}) {
    const auto a = serial::estimate_ergodic_rates(cfg, scheme);
    const auto b = estimate_ergodic_rates(cfg, scheme, Workers{std::max(workers.count, 2)});
    same = same && a.sum.mean == b.sum.mean && a.per_user.std_error == b.per_user.std_error;
  }
  return {"serial/parallel determinism", same, "200 trials, M=24, K=6"};
}

CheckResult wishart_trace(Workers workers) {
  const auto est = estimate_wishart_trace(24, 12, 2000, kSuiteSeed, workers);
  const double rel = std::abs(est.mean - 1.0);
  return {"wishart inverse trace", rel < 0.05, fmt::format("mean {:.4f} vs 1.0", est.mean)};
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(Workers workers) {
  return {power_constraint(), zf_orthogonality(), mf_bounds_coincide(), zf_gap_identity(),
          crossing_point(),   determinism(workers), wishart_trace(workers)};
}

}  // namespace nmimo
