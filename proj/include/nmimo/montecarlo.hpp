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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nmimo/model.hpp"

namespace nmimo {

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t trials = 0;
  double ci95_halfwidth = 0.0;
};

// Sample mean, standard error and normal-approximation 95% half-width. The
// summation runs in index order so the result only depends on the values.
MonteCarloEstimate summarize(std::span<const double> samples);

struct ErgodicRates {
  MonteCarloEstimate per_user;
  MonteCarloEstimate sum;
  // Draws rejected as singular and replaced.
  std::int64_t redraws = 0;
};

// Number of OpenMP threads; 0 keeps the runtime default.
struct Workers {
  int count = 0;
};

// Per-trial samples. per_user[t] is the user-average rate of trial t, so the
// mean over t equals the average over all users and trials.
struct ErgodicSamples {
  std::vector<double> per_user;
  std::vector<double> sum;
  std::int64_t redraws = 0;
};

inline constexpr std::uint32_t kMaxRedraws = 64;

ErgodicSamples sample_ergodic_rates(const SystemConfig& cfg, PrecoderScheme scheme, Workers workers = {});

// OpenMP kernel over trials.
ErgodicRates estimate_ergodic_rates(const SystemConfig& cfg, PrecoderScheme scheme, Workers workers = {});

namespace serial {

// Single-threaded reference implementations; bitwise identical to the
// parallel kernels by construction and kept for testing and benchmarking.
ErgodicSamples sample_ergodic_rates(const SystemConfig& cfg, PrecoderScheme scheme);
ErgodicRates estimate_ergodic_rates(const SystemConfig& cfg, PrecoderScheme scheme);
MonteCarloEstimate estimate_wishart_trace(int m, int k, int trials, std::uint64_t seed);
MonteCarloEstimate estimate_zf_column_norm(int m, int k, int trials, std::uint64_t seed);

}  // namespace serial

// Mean of tr((HH^*)^{-1}) over K x M draws; requires K < M.
MonteCarloEstimate estimate_wishart_trace(int m, int k, int trials, std::uint64_t seed, Workers workers = {});

// Mean of ||f_k||^2 over draws and columns of the raw ZF precoder; requires K < M.
MonteCarloEstimate estimate_zf_column_norm(int m, int k, int trials, std::uint64_t seed, Workers workers = {});

// Which candidate value for E||f_k||^2 the estimate supports: 1/(M-K) from
// the Wishart diagonal or 1/(M-K+1) from the ZF diversity-order argument.
struct ColumnNormVerdict {
  MonteCarloEstimate estimate;
  double wishart_candidate = 0.0;
  double diversity_candidate = 0.0;
  bool wishart_inside_ci = false;
  bool diversity_inside_ci = false;
};

ColumnNormVerdict compare_zf_column_norm(int m, int k, int trials, std::uint64_t seed, Workers workers = {});

}  // namespace nmimo
