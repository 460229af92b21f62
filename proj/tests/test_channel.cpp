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

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "nmimo/channel.hpp"
#include "nmimo/error.hpp"
#include "nmimo/philox.hpp"

using namespace nmimo;

TEST_CASE("Philox4x32-10 known-answer vectors") {
  using C = Philox4x32::Counter;
  CHECK(Philox4x32::block(C{0, 0, 0, 0}, {0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::block(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::block(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("uniform mapping stays in (0, 1]") {
  CHECK(uniform_open_closed(0) > 0.0);
  CHECK(uniform_open_closed(~std::uint64_t{0}) == 1.0);
}

TEST_CASE("generate_channel is a pure function of seed and trial") {
  SystemConfig cfg{3, 8, 12, 0.0, 10, 7};
  const auto a = generate_channel(cfg, 0);
  const auto b = generate_channel(cfg, 0);
  const auto c = generate_channel(cfg, 1);
  CHECK(a.users() == 12);
  CHECK(a.antennas() == 24);
  CHECK(a.entries() == b.entries());
  CHECK(a.entries() != c.entries());
  CHECK(a.entries().allFinite());

  SystemConfig other = cfg;
  other.seed = 8;
  CHECK(generate_channel(other, 0).entries() != a.entries());
  CHECK(generate_channel(12, 24, 7, {0, 1}).entries() != a.entries());
}

TEST_CASE("smaller draws are prefixes of larger ones with the same M") {
  const auto small = generate_channel(3, 8, 5, {4, 0});
  const auto large = generate_channel(6, 8, 5, {4, 0});
  CHECK(small.entries() == large.entries().topRows(3));
}

TEST_CASE("entry statistics match CN(0, 1)") {
  SystemConfig cfg{1, 20, 10, 0.0, 500, 3};  // 10^5 entries
  cd sum = 0.0;
  double sq = 0.0;
  double re_sq = 0.0;
  std::int64_t n = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    for (const cd& v : generate_channel(cfg, t).entries().reshaped()) {
      sum += v;
      sq += std::norm(v);
      re_sq += v.real() * v.real();
      ++n;
    }
  }
  CHECK(n == 100000);
  CHECK(std::abs(sum / double(n)) < 0.02);
  CHECK(sq / n == doctest::Approx(1.0).epsilon(0.02));
  CHECK(re_sq / n == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("row norms average to M") {
  for (int m : {8, 24}) {
    double total = 0.0;
    int rows = 0;
    for (int t = 0; t < 2000; ++t) {
      const auto h = generate_channel(4, m, 99, {static_cast<std::uint64_t>(t), 0});
      for (int k = 0; k < 4; ++k) total += h.entries().row(k).squaredNorm();
      rows += 4;
    }
    CHECK(total / rows == doctest::Approx(m).epsilon(0.02));
  }
}

TEST_CASE("channel_moments second and fourth moments") {
  SystemConfig cfg{1, 25, 8, 0.0, 10, 21};
  const auto mom = channel_moments(cfg, 500);  // 10^5 entries
  CHECK(mom.mean_abs_sq == doctest::Approx(1.0).epsilon(0.02));
  CHECK(mom.mean_fourth == doctest::Approx(2.0).epsilon(0.025));
  try {
    channel_moments(cfg, 1);
    FAIL("expected TrialsTooFew");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TrialsTooFew);
  }
}

TEST_CASE("channel CSV dump layout") {
  CMatrix h(2, 2);
  h << cd(1, 2), cd(3, 4), cd(-1, 0.5), cd(0, 0);
  std::ostringstream out;
  write_channel_csv(out, ChannelMatrix(h));
  CHECK(out.str() == "1,2,3,4\n-1,0.5,0,0\n");
}
