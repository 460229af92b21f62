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

#include <vector>

#include "nmimo/channel.hpp"
#include "nmimo/precoding.hpp"

namespace nmimo {

/// Per-user signal, interference, and SINR for one channel draw. Powers are
/// in units of the noise power.
struct SinrReport {
  std::vector<double> sinr;
  std::vector<double> signal_power;
  std::vector<double> interference_power;
};

struct RateSample {
  std::vector<double> per_user_rates;  // bits/s/Hz
  double sum_rate = 0.0;
};

SinrReport compute_sinr(const ChannelMatrix& h, const PrecodingMatrix& g, double power);

RateSample rates_from_sinr(const SinrReport& report);

}  // namespace nmimo
