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
#include <sstream>

#include "nmimo/error.hpp"
#include "nmimo/model.hpp"

using namespace nmimo;

namespace {

ErrorKind kind_of(const SystemConfig& cfg) {
  try {
    validate_config(cfg);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected validate_config to throw");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("validate_config accepts the default three-RU layout") {
  SystemConfig cfg{3, 8, 12, 0.0, 1000, 7};
  const auto v = validate_config(cfg);
  CHECK(v.antennas() == 24);
  CHECK(v.power() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(v.num_users == 12);
  CHECK(v.seed == 7u);
}

TEST_CASE("validate_config accepts the minimal configuration") {
  const auto v = validate_config(SystemConfig{1, 1, 1, 0.0, 10, 0});
  CHECK(v.antennas() == 1);
  CHECK(v.power() == 1.0);
}

TEST_CASE("validate_config rejects bad counts") {
  CHECK(kind_of(SystemConfig{3, 8, 0, 0.0, 100, 1}) == ErrorKind::NonPositiveParameter);
  CHECK(kind_of(SystemConfig{0, 8, 4, 0.0, 100, 1}) == ErrorKind::NonPositiveParameter);
  CHECK(kind_of(SystemConfig{3, -1, 4, 0.0, 100, 1}) == ErrorKind::NonPositiveParameter);
  CHECK(kind_of(SystemConfig{3, 8, 4, 0.0, 0, 1}) == ErrorKind::NonPositiveParameter);
  CHECK(kind_of(SystemConfig{3, 8, 4, 0.0, 1, 1}) == ErrorKind::TrialsTooFew);
  CHECK(kind_of(SystemConfig{3, 8, 4, NAN, 10, 1}) == ErrorKind::NonPositiveParameter);
}

TEST_CASE("power round-trips through decibels") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> db(-40.0, 40.0);
  for (int i = 0; i < 1000; ++i) {
    SystemConfig cfg;
    cfg.snr_db = db(rng);
    const double back = 10.0 * std::log10(cfg.power());
    CHECK(std::abs(back - cfg.snr_db) <= 1e-12 * std::max(1.0, std::abs(cfg.snr_db)));
  }
}

TEST_CASE("antenna count is the exact product") {
  for (int rus = 1; rus <= 6; ++rus)
    for (int per = 1; per <= 16; ++per) CHECK(SystemConfig{rus, per, 1, 0.0, 2, 0}.antennas() == rus * per);
}

TEST_CASE("key-value config parsing") {
  std::istringstream in(
      "# Fig. 5 operating point\n"
      "rus = 3\n"
      "antennas_per_ru=8\n"
      "\n"
      "users = 6\n"
      "snr_db = -5\n"
      "trials = 500\n"
      "seed = 18446744073709551615\n");
  const auto cfg = parse_config_kv(in);
  CHECK(cfg.antennas() == 24);
  CHECK(cfg.num_users == 6);
  CHECK(cfg.snr_db == -5.0);
  CHECK(cfg.trials == 500);
  CHECK(cfg.seed == 18446744073709551615ull);

  std::istringstream unknown("bogus = 1\n");
  CHECK_THROWS_AS(parse_config_kv(unknown), Error);
  std::istringstream missing_eq("rus 3\n");
  CHECK_THROWS_AS(parse_config_kv(missing_eq), Error);
  std::istringstream bad_int("users = 3x\n");
  try {
    parse_config_kv(bad_int);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadConfig);
    CHECK(exit_code_for(e.kind()) == 1);
  }
}

TEST_CASE("scheme names round-trip") {
  for (auto s : {kZfVector, kZfMatrix, kMfVector, kMfMatrix}) CHECK(parse_scheme(scheme_name(s)) == s);
  CHECK_THROWS_AS(parse_scheme("mmse"), Error);
}

TEST_CASE("exit codes separate validation from runtime failures") {
  CHECK(exit_code_for(ErrorKind::NonPositiveParameter) == 1);
  CHECK(exit_code_for(ErrorKind::TrialsTooFew) == 1);
  CHECK(exit_code_for(ErrorKind::InvalidSweep) == 1);
  CHECK(exit_code_for(ErrorKind::DomainError) == 2);
  CHECK(exit_code_for(ErrorKind::SingularChannel) == 2);
  CHECK(exit_code_for(ErrorKind::IoError) == 2);
}
