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

#include "nmimo/error.hpp"
#include "nmimo/model.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <string>

namespace nmimo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorKind::TrialsTooFew: return "TrialsTooFew";
    case ErrorKind::BadConfig: return "BadConfig";
    case ErrorKind::InvalidSweep: return "InvalidSweep";
    case ErrorKind::DimensionError: return "DimensionError";
    case ErrorKind::SingularChannel: return "SingularChannel";
    case ErrorKind::ZeroColumn: return "ZeroColumn";
    case ErrorKind::ZeroMatrix: return "ZeroMatrix";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NoCrossPoint: return "NoCrossPoint";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPositiveParameter:
    case ErrorKind::TrialsTooFew:
    case ErrorKind::BadConfig:
    case ErrorKind::InvalidSweep:
      return 1;
    default:
      return 2;
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view key, std::string_view value) {
  std::size_t used = 0;
  const std::string text(value);
  int parsed = 0;
  try {
    parsed = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty())
    throw Error(ErrorKind::BadConfig, "bad integer for '" + std::string(key) + "': " + text);
  return parsed;
}

}  // namespace

std::string_view scheme_name(PrecoderScheme scheme) {
  if (scheme.filter == Filter::ZF)
    return scheme.normalization == Normalization::Vector ? "zf-vec" : "zf-mat";
  return scheme.normalization == Normalization::Vector ? "mf-vec" : "mf-mat";
}

PrecoderScheme parse_scheme(std::string_view name) {
  for (auto s : {kZfVector, kZfMatrix, kMfVector, kMfMatrix})
    if (scheme_name(s) == name) return s;
  throw Error(ErrorKind::InvalidSweep, "unknown scheme '" + std::string(name) + "'");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double SystemConfig::power() const { return db_to_linear(snr_db); }

SystemConfig validate_config(const SystemConfig& cfg) {
  auto require_positive = [](int value, const char* name) {
    if (value <= 0)
      throw Error(ErrorKind::NonPositiveParameter, std::string(name) + " must be positive, got " + std::to_string(value));
  };
  require_positive(cfg.num_rus, "num_rus");
  require_positive(cfg.antennas_per_ru, "antennas_per_ru");
  require_positive(cfg.num_users, "num_users");
  require_positive(cfg.trials, "trials");
  if (cfg.trials < 2)
    throw Error(ErrorKind::TrialsTooFew, "at least 2 trials are needed for a variance estimate");
  if (!std::isfinite(cfg.snr_db) || !(cfg.power() > 0.0) || !std::isfinite(cfg.power()))
    throw Error(ErrorKind::NonPositiveParameter, "snr_db must give a finite positive power");
  return cfg;
}

SystemConfig parse_config_kv(std::istream& in, SystemConfig base) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorKind::BadConfig, "line " + std::to_string(line_no) + ": expected key = value");
    const auto key = trim(text.substr(0, eq));
    const auto value = trim(text.substr(eq + 1));
    if (key == "rus") {
      base.num_rus = parse_int(key, value);
    } else if (key == "antennas_per_ru") {
      base.antennas_per_ru = parse_int(key, value);
    } else if (key == "users") {
      base.num_users = parse_int(key, value);
    } else if (key == "trials") {
      base.trials = parse_int(key, value);
    } else if (key == "snr_db") {
      try {
        base.snr_db = std::stod(std::string(value));
      } catch (const std::exception&) {
        throw Error(ErrorKind::BadConfig, "bad number for snr_db: " + std::string(value));
      }
    } else if (key == "seed") {
      try {
        base.seed = std::stoull(std::string(value));
      } catch (const std::exception&) {
        throw Error(ErrorKind::BadConfig, "bad seed: " + std::string(value));
      }
    } else {
      throw Error(ErrorKind::BadConfig, "unknown key '" + std::string(key) + "'");
    }
  }
  return base;
}

SystemConfig load_config_file(const std::string& path, SystemConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open config file " + path);
  return parse_config_kv(in, base);
}

}  // namespace nmimo
