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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nmimo/model.hpp"
#include "nmimo/montecarlo.hpp"

namespace nmimo {

// Every series name that can appear in a sweep CSV.
enum class Series {
  ZfVec,
  ZfMat,
  MfVec,
  MfMat,
  BoundZfVecLower,
  BoundZfMatUpper,
  BoundMfMatLower,
  BoundMfVecUpper,
};

std::string_view series_name(Series s);
Series series_for(PrecoderScheme scheme);

inline constexpr std::string_view kSweepCsvHeader =
    "k,series,sum_rate,per_user_rate,ci95_halfwidth,trials,status";

struct SweepSpec {
  SystemConfig cfg;  // num_users is ignored; K comes from the range
  int k_min = 1;
  int k_max = 24;
  std::vector<PrecoderScheme> schemes{kZfVector, kZfMatrix, kMfVector, kMfMatrix};
  bool include_bounds = true;
  std::string output_path;
  Workers workers;
};

struct SweepRow {
  int k = 0;
  Series series = Series::ZfVec;
  std::optional<double> sum_rate;
  std::optional<double> per_user_rate;
  double ci95_halfwidth = 0.0;
  std::int64_t trials = 0;
  bool ok = true;
};

struct SweepOutput {
  std::vector<SweepRow> rows;
  std::string csv;
  nlohmann::json sidecar;
};

// Throws InvalidSweep (or a config error) before any computation runs.
void validate_sweep(const SweepSpec& spec);

// Computes the sweep without touching the filesystem.
SweepOutput compute_sweep(const SweepSpec& spec);

// compute_sweep() plus writing spec.output_path and the sidecar
// spec.output_path + ".json".
SweepOutput run_sweep(const SweepSpec& spec);

std::string sweep_csv(const std::vector<SweepRow>& rows);

// Analytic-only table of the four per-user bounds and the two normalization
// gaps for K in [k_min, k_max].
std::string run_bounds_table(int m, double p, int k_min, int k_max);

nlohmann::json run_crosspoint(int m, double p);

}  // namespace nmimo
