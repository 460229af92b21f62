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

#include "nmimo/channel.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "nmimo/error.hpp"
#include "nmimo/philox.hpp"

namespace nmimo {

ChannelMatrix::ChannelMatrix(CMatrix entries) : entries_(std::move(entries)) {}

ChannelMatrix generate_channel(int users, int antennas, std::uint64_t seed, DrawIndex index) {
  if (users <= 0 || antennas <= 0)
    throw Error(ErrorKind::DimensionError, "channel dimensions must be positive");

  const Philox4x32::Key key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  const auto trial_lo = static_cast<std::uint32_t>(index.trial);
  const auto trial_hi = static_cast<std::uint32_t>(index.trial >> 32);
  const double scale = std::sqrt(0.5);

  CMatrix h(users, antennas);
  for (int k = 0; k < users; ++k) {
    for (int m = 0; m < antennas; ++m) {
      // Entry (k, m) owns one Philox block, so a K x M draw is a prefix of
      // any larger draw with the same column count.
      const auto entry = static_cast<std::uint32_t>(k * antennas + m);
      const auto bits = Philox4x32::block({entry, trial_lo, trial_hi, index.retry}, key);
      const double u1 = uniform_open_closed((std::uint64_t{bits[0]} << 32) | bits[1]);
      const double u2 = uniform_open_closed((std::uint64_t{bits[2]} << 32) | bits[3]);
      // Box-Muller; |h|^2 = -log(u1) is Exp(1).
      const double radius = std::sqrt(-2.0 * std::log(u1)) * scale;
      const double angle = 2.0 * std::numbers::pi * u2;
      h(k, m) = cd(radius * std::cos(angle), radius * std::sin(angle));
    }
  }
  return ChannelMatrix(std::move(h));
}

ChannelMatrix generate_channel(const SystemConfig& cfg, std::uint64_t trial_index) {
  return generate_channel(cfg.num_users, cfg.antennas(), cfg.seed, DrawIndex{trial_index, 0});
}

ChannelMoments channel_moments(const SystemConfig& cfg, int trials) {
  if (trials < 2) throw Error(ErrorKind::TrialsTooFew, "channel_moments needs at least 2 trials");
  double second = 0.0;
  double fourth = 0.0;
  std::int64_t count = 0;
  for (int t = 0; t < trials; ++t) {
    const auto h = generate_channel(cfg, static_cast<std::uint64_t>(t));
    for (const cd& v : h.entries().reshaped()) {
      const double a = std::norm(v);
      second += a;
      fourth += a * a;
      ++count;
    }
  }
  return {second / static_cast<double>(count), fourth / static_cast<double>(count)};
}

void write_channel_csv(std::ostream& out, const ChannelMatrix& h) {
  const auto old_precision = out.precision(17);
  for (int k = 0; k < h.users(); ++k) {
    for (int m = 0; m < h.antennas(); ++m) {
      if (m > 0) out << ',';
      out << h.entries()(k, m).real() << ',' << h.entries()(k, m).imag();
    }
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace nmimo
