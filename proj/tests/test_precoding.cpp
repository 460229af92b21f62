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
#include <random>

#include "nmimo/channel.hpp"
#include "nmimo/error.hpp"
#include "nmimo/precoding.hpp"

using namespace nmimo;

namespace {

double max_abs(const CMatrix& a) { return a.cwiseAbs().maxCoeff(); }

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an nmimo::Error");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("zf of the identity channel is the identity") {
  const CMatrix eye = CMatrix::Identity(4, 4);
  const auto f = zf_precoder(ChannelMatrix(eye));
  CHECK(f.filter == Filter::ZF);
  CHECK(max_abs(f.columns - eye) < 1e-15);
}

TEST_CASE("zf of orthonormal rows is the transpose") {
  CMatrix h = CMatrix::Zero(2, 3);
  h(0, 0) = 1.0;
  h(1, 1) = 1.0;
  const auto f = zf_precoder(ChannelMatrix(h));
  CHECK(max_abs(f.columns - h.transpose()) < 1e-15);
}

TEST_CASE("zf residual H F - I stays below 1e-10") {
  const auto h = generate_channel(4, 8, 1, {0, 0});
  const auto f = zf_precoder(h);
  CHECK(max_abs(h.entries() * f.columns - CMatrix::Identity(4, 4)) < 1e-10);

  std::mt19937_64 rng(5);
  for (int draw = 0; draw < 300; ++draw) {
    const int m = std::uniform_int_distribution<int>(1, 64)(rng);
    const int k = std::uniform_int_distribution<int>(1, m)(rng);
    const auto hh = generate_channel(k, m, 77, {static_cast<std::uint64_t>(draw), 0});
    try {
      const auto ff = zf_precoder(hh);
      CHECK(max_abs(hh.entries() * ff.columns - CMatrix::Identity(k, k)) < 1e-10);
    } catch (const Error& e) {
      // Square draws can be badly conditioned; rejection is the contract then.
      CHECK(e.kind() == ErrorKind::SingularChannel);
    }
  }
}

TEST_CASE("zf rejects K > M and singular channels") {
  CHECK(kind_of([] { zf_precoder(generate_channel(5, 4, 1, {0, 0})); }) == ErrorKind::DimensionError);
  CMatrix rank_one(2, 3);
  rank_one << 1, 2, 3, 2, 4, 6;
  CHECK(kind_of([&] { zf_precoder(ChannelMatrix(rank_one)); }) == ErrorKind::SingularChannel);
  CMatrix nearly(2, 2);
  nearly << 1, 1, 1, 1 + 1e-9;
  CHECK(kind_of([&] { zf_precoder(ChannelMatrix(nearly)); }) == ErrorKind::SingularChannel);
}

TEST_CASE("mf is the conjugate transpose") {
  CMatrix h(1, 2);
  h << cd(0, 1), cd(0, 0);
  const auto f = mf_precoder(ChannelMatrix(h));
  CHECK(f.filter == Filter::MF);
  CHECK(f.columns(0, 0) == cd(0, -1));
  CHECK(f.columns(1, 0) == cd(0, 0));

  CMatrix real(2, 3);
  real << 1, 2, 3, 4, 5, 6;
  CHECK(mf_precoder(ChannelMatrix(real)).columns == real.transpose());

  const auto g = generate_channel(5, 9, 3, {2, 0});
  const auto fg = mf_precoder(g);
  CHECK(fg.columns.squaredNorm() == doctest::Approx(g.entries().squaredNorm()).epsilon(1e-15));
  for (int k = 0; k < 5; ++k)
    for (int m = 0; m < 9; ++m) CHECK(fg.columns(m, k) == std::conj(g.entries()(k, m)));
}

TEST_CASE("vector normalization examples") {
  RawPrecoder f{CMatrix::Zero(2, 4), Filter::MF};
  f.columns.col(0) << 3, 4;
  for (int k = 1; k < 4; ++k) f.columns(0, k) = 1.0;
  const auto g = normalize_vector(f);
  CHECK(g.scheme == kMfVector);
  CHECK(std::abs(g.columns(0, 0) - cd(0.3)) < 1e-15);
  CHECK(std::abs(g.columns(1, 0) - cd(0.4)) < 1e-15);
  CHECK(g.columns.col(0).squaredNorm() == doctest::Approx(0.25).epsilon(1e-14));

  RawPrecoder single{CMatrix(3, 1), Filter::ZF};
  single.columns << cd(1, 1), cd(2, 0), cd(0, -3);
  const auto u = normalize_vector(single);
  CHECK(u.columns.norm() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(max_abs(u.columns - single.columns / single.columns.norm()) < 1e-15);
}

TEST_CASE("matrix normalization examples") {
  RawPrecoder f{CMatrix::Zero(2, 2), Filter::ZF};
  f.columns(0, 0) = 1.0;
  f.columns(1, 1) = 2.0;
  const auto g = normalize_matrix(f);
  CHECK(g.scheme == kZfMatrix);
  CHECK(std::abs(g.columns(0, 0) - cd(1.0 / std::sqrt(5.0))) < 1e-15);
  CHECK(std::abs(g.columns(1, 1) - cd(2.0 / std::sqrt(5.0))) < 1e-15);
  CHECK(g.columns(1, 0) == cd(0.0));

  RawPrecoder single{CMatrix(3, 1), Filter::MF};
  single.columns << cd(1, 1), cd(2, 0), cd(0, -3);
  CHECK(max_abs(normalize_matrix(single).columns - normalize_vector(single).columns) < 1e-15);
}

TEST_CASE("normalization rejects zero input") {
  RawPrecoder f{CMatrix::Zero(3, 2), Filter::MF};
  f.columns(0, 0) = 1.0;
  CHECK(kind_of([&] { normalize_vector(f); }) == ErrorKind::ZeroColumn);
  CHECK_NOTHROW(normalize_matrix(f));
  f.columns.setZero();
  CHECK(kind_of([&] { normalize_matrix(f); }) == ErrorKind::ZeroMatrix);
}

TEST_CASE("total power is one for every scheme") {
  std::mt19937_64 rng(8);
  for (int draw = 0; draw < 300; ++draw) {
    const int m = std::uniform_int_distribution<int>(1, 64)(rng);
    const int k = std::uniform_int_distribution<int>(1, m)(rng);
    const auto h = generate_channel(k, m, 123, {static_cast<std::uint64_t>(draw), 0});
    for (auto scheme : {kZfVector, kZfMatrix, kMfVector, kMfMatrix}) {
      PrecodingMatrix g;
      try {
        g = build_precoder(h, scheme);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularChannel);
        continue;
      }
      CHECK(std::abs(g.columns.squaredNorm() - 1.0) < 1e-12);
      if (scheme.normalization == Normalization::Vector) {
        for (int c = 0; c < k; ++c) CHECK(std::abs(g.columns.col(c).squaredNorm() - 1.0 / k) < 1e-12);
      }
    }
  }
}

TEST_CASE("vector normalization ignores positive column scaling") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  const auto h = generate_channel(4, 8, 4, {0, 0});
  const auto f = mf_precoder(h);
  const auto g = normalize_vector(f);
  for (int rep = 0; rep < 20; ++rep) {
    RawPrecoder scaled = f;
    for (int c = 0; c < 4; ++c) scaled.columns.col(c) *= scale(rng);
    CHECK(max_abs(normalize_vector(scaled).columns - g.columns) < 1e-14);
  }
}

TEST_CASE("single user: vector and matrix normalization agree") {
  for (int draw = 0; draw < 50; ++draw) {
    const auto h = generate_channel(1, 6, 10, {static_cast<std::uint64_t>(draw), 0});
    for (auto filter : {Filter::ZF, Filter::MF}) {
      const auto f = raw_precoder(h, filter);
      CHECK(max_abs(normalize_vector(f).columns - normalize_matrix(f).columns) < 1e-15);
    }
  }
}
