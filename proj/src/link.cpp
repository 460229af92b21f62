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

#include "nmimo/link.hpp"

#include <cmath>

#include "nmimo/error.hpp"

namespace nmimo {

SinrReport compute_sinr(const ChannelMatrix& h, const PrecodingMatrix& g, double power) {
  if (g.columns.rows() != h.antennas() || g.columns.cols() != h.users())
    throw Error(ErrorKind::DimensionError, "precoder shape does not match the channel");

  // gains(k, l) = |h_k^T g_l|^2
  const Eigen::MatrixXd gains = (h.entries() * g.columns).cwiseAbs2();
  const auto users = static_cast<std::size_t>(h.users());

  SinrReport r;
  r.sinr.resize(users);
  r.signal_power.resize(users);
  r.interference_power.resize(users);
  for (std::size_t k = 0; k < users; ++k) {
    const auto row = static_cast<Eigen::Index>(k);
    double leaked = 0.0;
    for (Eigen::Index l = 0; l < gains.cols(); ++l)
      if (l != row) leaked += gains(row, l);
    r.signal_power[k] = power * gains(row, row);
    r.interference_power[k] = power * leaked;
    r.sinr[k] = r.signal_power[k] / (r.interference_power[k] + SignalModel::kNoisePower);
  }
  return r;
}

RateSample rates_from_sinr(const SinrReport& report) {
  RateSample out;
  out.per_user_rates.reserve(report.sinr.size());
  for (double s : report.sinr) {
    const double rate = std::log2(1.0 + s);
    out.per_user_rates.push_back(rate);
    out.sum_rate += rate;
  }
  return out;
}

}  // namespace nmimo
