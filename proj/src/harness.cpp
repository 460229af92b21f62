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

#include "nmimo/harness.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>

#include <fmt/format.h>

#include "nmimo/bounds.hpp"
#include "nmimo/error.hpp"

namespace nmimo {

namespace {

std::string fixed(double v) { return fmt::format("{:.10f}", v); }

std::string optional_fixed(const std::optional<double>& v) { return v ? fixed(*v) : std::string(); }

nlohmann::json optional_json(const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

SweepRow bound_row(int k, Series series, int m, double p) {
  SweepRow row{k, series, std::nullopt, std::nullopt, 0.0, 0, true};
  const double kd = k;
  try {
    double rate = 0.0;
    switch (series) {
      case Series::BoundZfVecLower: rate = bounds::zf_vector_lower(m, kd, p); break;
      case Series::BoundZfMatUpper: rate = bounds::zf_matrix_upper(m, kd, p); break;
      case Series::BoundMfMatLower: rate = bounds::mf_matrix_lower(m, kd, p); break;
      case Series::BoundMfVecUpper: rate = bounds::mf_vector_upper(m, kd, p); break;
      default: break;
    }
    row.per_user_rate = rate;
    row.sum_rate = kd * rate;
  } catch (const Error&) {
    row.ok = false;
  }
  return row;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "failed writing " + path);
}

}  // namespace

std::string_view series_name(Series s) {
  switch (s) {
    case Series::ZfVec: return "zf-vec";
    case Series::ZfMat: return "zf-mat";
    case Series::MfVec: return "mf-vec";
    case Series::MfMat: return "mf-mat";
    case Series::BoundZfVecLower: return "bound-zf-vec-lower";
    case Series::BoundZfMatUpper: return "bound-zf-mat-upper";
    case Series::BoundMfMatLower: return "bound-mf-mat-lower";
    case Series::BoundMfVecUpper: return "bound-mf-vec-upper";
  }
  return "unknown";
}

Series series_for(PrecoderScheme scheme) {
  if (scheme.filter == Filter::ZF)
    return scheme.normalization == Normalization::Vector ? Series::ZfVec : Series::ZfMat;
  return scheme.normalization == Normalization::Vector ? Series::MfVec : Series::MfMat;
}

void validate_sweep(const SweepSpec& spec) {
  SystemConfig probe = spec.cfg;
  probe.num_users = 1;
  validate_config(probe);
  if (spec.k_min < 1) throw Error(ErrorKind::InvalidSweep, "k-min must be at least 1");
  if (spec.k_max < spec.k_min) throw Error(ErrorKind::InvalidSweep, "k-max must not be below k-min");
  if (spec.schemes.empty()) throw Error(ErrorKind::InvalidSweep, "scheme list is empty");
  for (const auto scheme : spec.schemes) {
    if (scheme.filter == Filter::ZF && spec.k_max > probe.antennas())
      throw Error(ErrorKind::InvalidSweep, fmt::format("k-max {} exceeds M = {} for {}", spec.k_max,
                                                        probe.antennas(), scheme_name(scheme)));
  }
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string csv(kSweepCsvHeader);
  csv += '\n';
  for (const auto& r : rows) {
    csv += fmt::format("{},{},{},{},{},{},{}\n", r.k, series_name(r.series), optional_fixed(r.sum_rate),
                       optional_fixed(r.per_user_rate), fixed(r.ci95_halfwidth), r.trials, r.ok ? "ok" : "error");
  }
  return csv;
}

SweepOutput compute_sweep(const SweepSpec& spec) {
  validate_sweep(spec);
  const int m = spec.cfg.antennas();
  const double p = spec.cfg.power();

  SweepOutput out;
  std::int64_t redraws = 0;
  for (int k = spec.k_min; k <= spec.k_max; ++k) {
    SystemConfig cfg = spec.cfg;
    cfg.num_users = k;
    for (const auto scheme : spec.schemes) {
      SweepRow row{k, series_for(scheme), std::nullopt, std::nullopt, 0.0, cfg.trials, true};
      try {
        const ErgodicRates est = estimate_ergodic_rates(cfg, scheme, spec.workers);
        row.sum_rate = est.sum.mean;
        row.per_user_rate = est.per_user.mean;
        row.ci95_halfwidth = est.sum.ci95_halfwidth;
        redraws += est.redraws;
      } catch (const Error&) {
        row.ok = false;
      }
      out.rows.push_back(row);
    }
    if (spec.include_bounds) {
      for (auto s : {Series::BoundZfVecLower, Series::BoundZfMatUpper, Series::BoundMfMatLower, Series::BoundMfVecUpper})
        out.rows.push_back(bound_row(k, s, m, p));
    }
  }
  out.csv = sweep_csv(out.rows);

  nlohmann::json& j = out.sidecar;
  j["m"] = m;
  j["num_rus"] = spec.cfg.num_rus;
  j["antennas_per_ru"] = spec.cfg.antennas_per_ru;
  j["snr_db"] = spec.cfg.snr_db;
  j["power"] = p;
  j["k_min"] = spec.k_min;
  j["k_max"] = spec.k_max;
  j["seed"] = spec.cfg.seed;
  j["trials"] = spec.cfg.trials;
  j["schemes"] = nlohmann::json::array();
  for (const auto s : spec.schemes) j["schemes"].push_back(std::string(scheme_name(s)));
  j["include_bounds"] = spec.include_bounds;
  j["kcross_approx"] = bounds::kcross_approx(m, p);
  if (m >= 2) {
    const auto cp = bounds::kcross_exact(m, p);
    j["k_exact"] = optional_json(cp.k_exact);
    j["k_lower_root"] = optional_json(cp.k_lower_root);
    j["cross_exists"] = cp.exists;
    j["kcross_relative_gap"] =
        cp.k_exact ? nlohmann::json(std::abs(cp.k_approx - *cp.k_exact) / *cp.k_exact) : nlohmann::json(nullptr);
  } else {
    j["kcross_relative_gap"] = nullptr;
    j["k_exact"] = nullptr;
    j["k_lower_root"] = nullptr;
    j["cross_exists"] = false;
  }
  j["redraws"] = redraws;
  j["timestamp"] = utc_timestamp();
  return out;
}

SweepOutput run_sweep(const SweepSpec& spec) {
  SweepOutput out = compute_sweep(spec);
  if (spec.output_path.empty()) throw Error(ErrorKind::IoError, "no output path given");
  write_text(spec.output_path, out.csv);
  write_text(spec.output_path + ".json", out.sidecar.dump(2) + "\n");
  return out;
}

std::string run_bounds_table(int m, double p, int k_min, int k_max) {
  if (m < 1) throw Error(ErrorKind::InvalidSweep, "M must be positive");
  if (!(p > 0.0)) throw Error(ErrorKind::InvalidSweep, "power must be positive");
  if (k_min < 1 || k_max < k_min) throw Error(ErrorKind::InvalidSweep, "bad K range");

  std::string csv = "k,zf_vec_lower,zf_mat_upper,mf_mat_lower,mf_vec_upper,gap_zf,gap_mf,status\n";
  for (int k = k_min; k <= k_max; ++k) {
    std::vector<std::string> failed;
    auto eval = [&](const char* name, auto fn) -> std::optional<double> {
      try {
        return fn(static_cast<double>(m), static_cast<double>(k), p);
      } catch (const Error&) {
        failed.emplace_back(name);
        return std::nullopt;
      }
    };
    const auto zf_lo = eval("zf_vec_lower", bounds::zf_vector_lower);
    const auto zf_up = eval("zf_mat_upper", bounds::zf_matrix_upper);
    const auto mf_lo = eval("mf_mat_lower", bounds::mf_matrix_lower);
    const auto mf_up = eval("mf_vec_upper", bounds::mf_vector_upper);
    std::optional<double> gap_zf;
    std::optional<double> gap_mf;
    if (zf_lo && zf_up) gap_zf = *zf_lo - *zf_up;
    if (mf_lo && mf_up) gap_mf = *mf_lo - *mf_up;
    std::string status = "ok";
    if (!failed.empty()) {
      status = "error:";
      for (std::size_t i = 0; i < failed.size(); ++i) status += (i ? ";" : "") + failed[i];
    }
    csv += fmt::format("{},{},{},{},{},{},{},{}\n", k, optional_fixed(zf_lo), optional_fixed(zf_up),
                       optional_fixed(mf_lo), optional_fixed(mf_up), optional_fixed(gap_zf), optional_fixed(gap_mf),
                       status);
  }
  return csv;
}

nlohmann::json run_crosspoint(int m, double p) {
  const double md = m;
  const auto cp = bounds::kcross_exact(md, p);
  nlohmann::json j;
  j["m"] = m;
  j["power"] = p;
  j["snr_db"] = 10.0 * std::log10(p);
  j["k_approx"] = cp.k_approx;
  j["exists"] = cp.exists;
  j["k_exact"] = optional_json(cp.k_exact);
  j["k_lower_root"] = optional_json(cp.k_lower_root);
  if (const auto roots = bounds::crossing_quadratic_roots(md, p)) {
    j["quadratic_roots"] = {roots->lower, roots->upper};
  } else {
    j["quadratic_roots"] = nullptr;
  }
  if (cp.k_exact) {
    j["residual"] = std::abs(bounds::zf_vector_lower(md, *cp.k_exact, p) - bounds::mf_matrix_lower(md, *cp.k_exact, p));
    j["approx_relative_gap"] = std::abs(cp.k_approx - *cp.k_exact) / *cp.k_exact;
  }
  const auto grad = bounds::gradient_report(md, p);
  j["gradient_discriminant"] = bounds::gradient_discriminant(md, p);
  j["gradient_difference_paper"] = optional_json(grad.closed_form);
  j["gradient_difference_numeric"] = optional_json(grad.numeric_value);
  j["recommendations"] = nlohmann::json::array();
  if (cp.k_exact) {
    const int lo = std::max(1, static_cast<int>(std::floor(*cp.k_exact)));
    const int hi = std::max(1, static_cast<int>(std::ceil(*cp.k_exact)));
    for (int k : {lo, hi}) {
      j["recommendations"].push_back(
          {{"k", k}, {"precoder", std::string(bounds::to_string(bounds::recommend_precoder(md, k, p)))}});
    }
  }
  return j;
}

}  // namespace nmimo
