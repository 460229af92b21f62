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

#include "nmimo/montecarlo.hpp"

#include <cmath>
#include <exception>
#include <string>

#include <omp.h>

#include "nmimo/channel.hpp"
#include "nmimo/error.hpp"
#include "nmimo/link.hpp"
#include "nmimo/precoding.hpp"

namespace nmimo {

namespace {

struct TrialValues {
  double per_user = 0.0;
  double sum = 0.0;
  std::uint32_t redraws = 0;
};

int thread_count(Workers w) { return w.count > 0 ? w.count : omp_get_max_threads(); }

// Draws the channel for trial t, replacing it with (t, retry) draws while
// `use` reports it as singular.
template <class Use>
TrialValues with_regular_channel(int users, int antennas, std::uint64_t seed, std::uint64_t trial, const Use& use) {
  for (std::uint32_t retry = 0; retry <= kMaxRedraws; ++retry) {
    const ChannelMatrix h = generate_channel(users, antennas, seed, DrawIndex{trial, retry});
    try {
      TrialValues v = use(h);
      v.redraws = retry;
      return v;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularChannel) throw;
    }
  }
  throw Error(ErrorKind::SingularChannel, "trial " + std::to_string(trial) + " stayed singular after redraws");
}

template <class Kernel>
std::vector<TrialValues> map_trials_serial(int trials, const Kernel& kernel) {
  std::vector<TrialValues> out(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) out[static_cast<std::size_t>(t)] = kernel(static_cast<std::uint64_t>(t));
  return out;
}

// Each trial writes only its own slot; the reduction happens afterwards in
// index order, so the thread count never changes a result bit.
template <class Kernel>
std::vector<TrialValues> map_trials_parallel(int trials, Workers workers, const Kernel& kernel) {
  std::vector<TrialValues> out(static_cast<std::size_t>(trials));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(workers))
  for (int t = 0; t < trials; ++t) {
    try {
      out[static_cast<std::size_t>(t)] = kernel(static_cast<std::uint64_t>(t));
    } catch (...) {
#pragma omp critical(nmimo_mc_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

void check_ergodic_inputs(const SystemConfig& cfg, PrecoderScheme scheme) {
  validate_config(cfg);
  if (scheme.filter == Filter::ZF && cfg.num_users > cfg.antennas())
    throw Error(ErrorKind::DimensionError, "ZF needs K <= M");
}

auto ergodic_kernel(const SystemConfig& cfg, PrecoderScheme scheme) {
  const double power = cfg.power();
  const int users = cfg.num_users;
  const int antennas = cfg.antennas();
  const std::uint64_t seed = cfg.seed;
  return [=](std::uint64_t trial) {
    return with_regular_channel(users, antennas, seed, trial, [&](const ChannelMatrix& h) {
      const RateSample rates = rates_from_sinr(compute_sinr(h, build_precoder(h, scheme), power));
      return TrialValues{rates.sum_rate / users, rates.sum_rate, 0};
    });
  };
}

void check_wishart_inputs(int m, int k, int trials) {
  if (m <= 0 || k <= 0) throw Error(ErrorKind::DomainError, "M and K must be positive");
  if (k >= m) throw Error(ErrorKind::DomainError, "needs K < M");
  if (trials < 2) throw Error(ErrorKind::TrialsTooFew, "needs at least 2 trials");
}

auto wishart_kernel(int m, int k, std::uint64_t seed) {
  return [=](std::uint64_t trial) {
    return with_regular_channel(k, m, seed, trial, [&](const ChannelMatrix& h) {
      const CMatrix gram = h.entries() * h.entries().adjoint();
      const Eigen::LLT<CMatrix> llt(gram);
      if (llt.info() != Eigen::Success || 1.0 / llt.rcond() > kSingularConditionLimit)
        throw Error(ErrorKind::SingularChannel, "singular Gram matrix");
      const CMatrix inverse = llt.solve(CMatrix::Identity(k, k));
      return TrialValues{inverse.trace().real(), 0.0, 0};
    });
  };
}

auto column_norm_kernel(int m, int k, std::uint64_t seed) {
  return [=](std::uint64_t trial) {
    return with_regular_channel(k, m, seed, trial, [&](const ChannelMatrix& h) {
      const RawPrecoder f = zf_precoder(h);
      return TrialValues{f.columns.colwise().squaredNorm().mean(), 0.0, 0};
    });
  };
}

ErgodicSamples to_samples(const std::vector<TrialValues>& values) {
  ErgodicSamples s;
  s.per_user.reserve(values.size());
  s.sum.reserve(values.size());
  for (const auto& v : values) {
    s.per_user.push_back(v.per_user);
    s.sum.push_back(v.sum);
    s.redraws += v.redraws;
  }
  return s;
}

ErgodicRates to_rates(const ErgodicSamples& s) { return {summarize(s.per_user), summarize(s.sum), s.redraws}; }

MonteCarloEstimate summarize_first(const std::vector<TrialValues>& values) {
  std::vector<double> xs;
  xs.reserve(values.size());
  for (const auto& v : values) xs.push_back(v.per_user);
  return summarize(xs);
}

}  // namespace

MonteCarloEstimate summarize(std::span<const double> samples) {
  const auto n = static_cast<std::int64_t>(samples.size());
  if (n < 2) throw Error(ErrorKind::TrialsTooFew, "an estimate needs at least 2 samples");
  double total = 0.0;
  for (double x : samples) total += x;
  const double mean = total / static_cast<double>(n);
  double squares = 0.0;
  for (double x : samples) squares += (x - mean) * (x - mean);
  const double variance = squares / static_cast<double>(n - 1);
  const double se = std::sqrt(variance / static_cast<double>(n));
  return {mean, se, n, 1.96 * se};
}

ErgodicSamples sample_ergodic_rates(const SystemConfig& cfg, PrecoderScheme scheme, Workers workers) {
  check_ergodic_inputs(cfg, scheme);
  return to_samples(map_trials_parallel(cfg.trials, workers, ergodic_kernel(cfg, scheme)));
}

ErgodicRates estimate_ergodic_rates(const SystemConfig& cfg, PrecoderScheme scheme, Workers workers) {
  return to_rates(sample_ergodic_rates(cfg, scheme, workers));
}

MonteCarloEstimate estimate_wishart_trace(int m, int k, int trials, std::uint64_t seed, Workers workers) {
  check_wishart_inputs(m, k, trials);
  return summarize_first(map_trials_parallel(trials, workers, wishart_kernel(m, k, seed)));
}

MonteCarloEstimate estimate_zf_column_norm(int m, int k, int trials, std::uint64_t seed, Workers workers) {
  check_wishart_inputs(m, k, trials);
  return summarize_first(map_trials_parallel(trials, workers, column_norm_kernel(m, k, seed)));
}

ColumnNormVerdict compare_zf_column_norm(int m, int k, int trials, std::uint64_t seed, Workers workers) {
  ColumnNormVerdict v;
  v.estimate = estimate_zf_column_norm(m, k, trials, seed, workers);
  v.wishart_candidate = 1.0 / (m - k);
  v.diversity_candidate = 1.0 / (m - k + 1);
  const auto inside = [&](double c) { return std::abs(v.estimate.mean - c) <= v.estimate.ci95_halfwidth; };
  v.wishart_inside_ci = inside(v.wishart_candidate);
  v.diversity_inside_ci = inside(v.diversity_candidate);
  return v;
}

namespace serial {

ErgodicSamples sample_ergodic_rates(const SystemConfig& cfg, PrecoderScheme scheme) {
  check_ergodic_inputs(cfg, scheme);
  return to_samples(map_trials_serial(cfg.trials, ergodic_kernel(cfg, scheme)));
}

ErgodicRates estimate_ergodic_rates(const SystemConfig& cfg, PrecoderScheme scheme) {
  return to_rates(serial::sample_ergodic_rates(cfg, scheme));
}

MonteCarloEstimate estimate_wishart_trace(int m, int k, int trials, std::uint64_t seed) {
  check_wishart_inputs(m, k, trials);
  return summarize_first(map_trials_serial(trials, wishart_kernel(m, k, seed)));
}

MonteCarloEstimate estimate_zf_column_norm(int m, int k, int trials, std::uint64_t seed) {
  check_wishart_inputs(m, k, trials);
  return summarize_first(map_trials_serial(trials, column_norm_kernel(m, k, seed)));
}

}  // namespace serial

}  // namespace nmimo
