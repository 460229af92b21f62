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

// Command-line harness: Monte Carlo sweeps, analytic bound tables and
// crossing-point reports as CSV / JSON.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nmimo/channel.hpp"
#include "nmimo/error.hpp"
#include "nmimo/harness.hpp"
#include "nmimo/invariants.hpp"
#include "nmimo/model.hpp"

namespace {

struct Options {
  std::string config_path;
  std::optional<int> rus;
  std::optional<int> antennas_per_ru;
  std::optional<int> users;
  std::optional<double> snr_db;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::optional<int> k_min;
  std::optional<int> k_max;
  std::string schemes = "zf-vec,zf-mat,mf-vec,mf-mat";
  bool bounds = true;
  std::string out;
  int workers = 0;
  std::uint64_t trial_index = 0;
};

void add_system_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--config", o.config_path, "key = value config file applied before flags");
  cmd.add_option("--rus", o.rus, "number of radio units");
  cmd.add_option("--antennas-per-ru", o.antennas_per_ru, "transmit antennas per radio unit");
  cmd.add_option("--snr-db", o.snr_db, "total transmit SNR in dB");
}

nmimo::SystemConfig resolve_config(const Options& o) {
  nmimo::SystemConfig cfg;
  if (!o.config_path.empty()) cfg = nmimo::load_config_file(o.config_path, cfg);
  if (o.rus) cfg.num_rus = *o.rus;
  if (o.antennas_per_ru) cfg.antennas_per_ru = *o.antennas_per_ru;
  if (o.users) cfg.num_users = *o.users;
  if (o.snr_db) cfg.snr_db = *o.snr_db;
  if (o.trials) cfg.trials = *o.trials;
  if (o.seed) cfg.seed = *o.seed;
  return cfg;
}

std::vector<nmimo::PrecoderScheme> parse_schemes(const std::string& list) {
  std::vector<nmimo::PrecoderScheme> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(nmimo::parse_scheme(item));
  }
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw nmimo::Error(nmimo::ErrorKind::IoError, "cannot open " + path);
  f << text;
}

int run_sweep(const Options& o) {
  nmimo::SweepSpec spec;
  spec.cfg = resolve_config(o);
  spec.k_min = o.k_min.value_or(1);
  spec.k_max = o.k_max.value_or(spec.cfg.antennas());
  spec.schemes = parse_schemes(o.schemes);
  spec.include_bounds = o.bounds;
  spec.output_path = o.out;
  spec.workers = nmimo::Workers{o.workers};
  if (spec.output_path.empty()) {
    const auto result = nmimo::compute_sweep(spec);
    std::cout << result.csv;
    std::cerr << result.sidecar.dump(2) << '\n';
  } else {
    const auto result = nmimo::run_sweep(spec);
    std::cerr << "wrote " << result.rows.size() << " rows to " << spec.output_path << '\n';
  }
  return 0;
}

int run_bounds(const Options& o) {
  auto cfg = resolve_config(o);
  cfg.num_users = 1;
  nmimo::validate_config(cfg);
  const int m = cfg.antennas();
  emit(o.out, nmimo::run_bounds_table(m, cfg.power(), o.k_min.value_or(1), o.k_max.value_or(m)));
  return 0;
}

int run_crosspoint(const Options& o) {
  auto cfg = resolve_config(o);
  cfg.num_users = 1;
  nmimo::validate_config(cfg);
  emit(o.out, nmimo::run_crosspoint(cfg.antennas(), cfg.power()).dump(2) + "\n");
  return 0;
}

int run_validate(const Options& o) {
  bool all = true;
  for (const auto& check : nmimo::run_invariant_suite(nmimo::Workers{o.workers})) {
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << " (" << check.detail << ")\n";
    all = all && check.passed;
  }
  return all ? 0 : 2;
}

int run_dump_channel(const Options& o) {
  const auto cfg = nmimo::validate_config(resolve_config(o));
  std::ostringstream text;
  nmimo::write_channel_csv(text, nmimo::generate_channel(cfg, o.trial_index));
  emit(o.out, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Network massive MIMO precoding simulator"};
  app.require_subcommand(1);
  Options o;

  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sum-rate sweep over K with analytic bounds");
  add_system_flags(*sweep, o);
  sweep->add_option("--k-min", o.k_min, "first user count");
  sweep->add_option("--k-max", o.k_max, "last user count (default M)");
  sweep->add_option("--trials", o.trials, "channel draws per (K, scheme) point");
  sweep->add_option("--seed", o.seed, "random seed");
  sweep->add_option("--schemes", o.schemes, "comma list from zf-vec, zf-mat, mf-vec, mf-mat");
  sweep->add_flag("--bounds,!--no-bounds", o.bounds, "include analytic bound series");
  sweep->add_option("--out", o.out, "CSV output path; a .json sidecar is written next to it");
  sweep->add_option("--workers", o.workers, "OpenMP threads (0 = runtime default)");

  auto* bounds = app.add_subcommand("bounds", "Closed-form per-user rate bounds table");
  add_system_flags(*bounds, o);
  bounds->add_option("--k-min", o.k_min, "first user count");
  bounds->add_option("--k-max", o.k_max, "last user count (default M)");
  bounds->add_option("--out", o.out, "CSV output path (default stdout)");

  auto* cross = app.add_subcommand("crosspoint", "ZF/MF crossing point and precoder recommendation");
  add_system_flags(*cross, o);
  cross->add_option("--out", o.out, "JSON output path (default stdout)");

  auto* validate = app.add_subcommand("validate", "Run the invariant self-check");
  validate->add_option("--workers", o.workers, "OpenMP threads (0 = runtime default)");

  auto* dump = app.add_subcommand("dump-channel", "Write one channel draw as CSV");
  add_system_flags(*dump, o);
  dump->add_option("--users", o.users, "number of users K");
  dump->add_option("--seed", o.seed, "random seed");
  dump->add_option("--trial", o.trial_index, "trial index");
  dump->add_option("--out", o.out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*sweep) return run_sweep(o);
    if (*bounds) return run_bounds(o);
    if (*cross) return run_crosspoint(o);
    if (*validate) return run_validate(o);
    if (*dump) return run_dump_channel(o);
  } catch (const nmimo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return nmimo::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
