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
#include <iosfwd>
#include <string>
#include <string_view>

namespace nmimo {

enum class Filter { ZF, MF };
enum class Normalization { Vector, Matrix };

struct PrecoderScheme {
  Filter filter = Filter::ZF;
  Normalization normalization = Normalization::Vector;

  friend bool operator==(const PrecoderScheme&, const PrecoderScheme&) = default;
};

inline constexpr PrecoderScheme kZfVector{Filter::ZF, Normalization::Vector};
inline constexpr PrecoderScheme kZfMatrix{Filter::ZF, Normalization::Matrix};
inline constexpr PrecoderScheme kMfVector{Filter::MF, Normalization::Vector};
inline constexpr PrecoderScheme kMfMatrix{Filter::MF, Normalization::Matrix};

// "zf-vec", "zf-mat", "mf-vec", "mf-mat"
std::string_view scheme_name(PrecoderScheme scheme);
PrecoderScheme parse_scheme(std::string_view name);

// Received-signal model: y_k = sqrt(P) h_k^T g_k s_k + interference + n_k with
// unit-power symbols and unit-variance noise, so P is the total transmit SNR.
struct SignalModel {
  static constexpr double kSymbolPower = 1.0;
  static constexpr double kNoisePower = 1.0;
};

// Experiment parameters. Counts are signed so that bad input can be represented
// and rejected by validate_config() instead of wrapping around.
struct SystemConfig {
  int num_rus = 3;
  int antennas_per_ru = 8;
  int num_users = 12;
  double snr_db = 0.0;
  int trials = 2000;
  std::uint64_t seed = 1;

  // M, the number of cooperating transmit antennas.
  int antennas() const { return num_rus * antennas_per_ru; }
  // Linear total transmit power P = 10^(snr_db / 10).
  double power() const;
};

double db_to_linear(double db);

SystemConfig validate_config(const SystemConfig& cfg);

// Applies `key = value` lines on top of `base`. Blank lines and lines starting
// with '#' are ignored. Recognized keys: rus, antennas_per_ru, users, snr_db,
// trials, seed.
SystemConfig parse_config_kv(std::istream& in, SystemConfig base = {});
SystemConfig load_config_file(const std::string& path, SystemConfig base = {});

}  // namespace nmimo
