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

#include <complex>
#include <cstdint>
#include <iosfwd>

#include <Eigen/Dense>

#include "nmimo/model.hpp"

namespace nmimo {

using cd = std::complex<double>;
using CMatrix = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic>;

// K x M downlink channel; row k is h_k^T.
class ChannelMatrix {
 public:
  ChannelMatrix() = default;
  explicit ChannelMatrix(CMatrix entries);

  const CMatrix& entries() const { return entries_; }
  int users() const { return static_cast<int>(entries_.rows()); }
  int antennas() const { return static_cast<int>(entries_.cols()); }

 private:
  CMatrix entries_;
};

// Coordinates of one channel draw. `retry` separates redraws of a rejected
// trial from the trial's first draw.
struct DrawIndex {
  std::uint64_t trial = 0;
  std::uint32_t retry = 0;
};

// i.i.d. CN(0, 1) entries (per-component variance 1/2), a pure function of
// (seed, trial, retry) and the matrix shape.
ChannelMatrix generate_channel(int users, int antennas, std::uint64_t seed, DrawIndex index);
ChannelMatrix generate_channel(const SystemConfig& cfg, std::uint64_t trial_index);

struct ChannelMoments {
  double mean_abs_sq = 0.0;
  double mean_fourth = 0.0;
};

// Empirical E|h|^2 and E|h|^4 over every entry of `trials` draws of cfg's shape.
ChannelMoments channel_moments(const SystemConfig& cfg, int trials);

// One row per user, columns alternate real and imaginary parts.
void write_channel_csv(std::ostream& out, const ChannelMatrix& h);

}  // namespace nmimo
