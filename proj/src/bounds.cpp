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

#include "nmimo/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nmimo/error.hpp"

namespace nmimo::bounds {

namespace {

void require_power(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw Error(ErrorKind::DomainError, "power must be positive and finite");
}

// Unchecked closed forms, shared by the checked API and the finite
// differences which may step slightly outside [1, M].
double zf_vec_raw(double m, double k, double p) { return std::log2(1.0 + p * (m - k + 1.0) / k); }
double mf_mat_raw(double m, double k, double p) { return std::log2(1.0 + p * (m + 1.0) / (p * (k - 1.0) + k)); }

double bound_gap(double m, double k, double p) { return zf_vec_raw(m, k, p) - mf_mat_raw(m, k, p); }

template <class F>
double bisect(const F& f, double lo, double hi) {
  const bool lo_negative = f(lo) < 0.0;
  for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) < 0.0) == lo_negative)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Location of the largest value of the bound gap on [1, M]: coarse grid,
// then golden-section refinement inside the best grid cell pair.
double argmax_gap(double m, double p) {
  constexpr int kGrid = 4096;
  const double width = (m - 1.0) / kGrid;
  int best = 0;
  double best_value = bound_gap(m, 1.0, p);
  for (int i = 1; i <= kGrid; ++i) {
    const double v = bound_gap(m, 1.0 + i * width, p);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  double a = 1.0 + std::max(best - 1, 0) * width;
  double b = 1.0 + std::min(best + 1, kGrid) * width;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int i = 0; i < 200 && b - a > 1e-13 * b; ++i) {
    const double c = b - inv_phi * (b - a);
    const double d = a + inv_phi * (b - a);
    if (bound_gap(m, c, p) > bound_gap(m, d, p))
      b = d;
    else
      a = c;
  }
  return 0.5 * (a + b);
}

}  // namespace

double zf_vector_lower(double m, double k, double p) {
  require_power(p);
  if (!(k >= 1.0) || k > m)
    throw Error(ErrorKind::DomainError, "zf_vector_lower needs 1 <= K <= M");
  return zf_vec_raw(m, k, p);
}

double zf_matrix_upper(double m, double k, double p) {
  require_power(p);
  if (!(k >= 1.0) || k >= m)
    throw Error(ErrorKind::DomainError, "zf_matrix_upper needs 1 <= K < M");
  return std::log2(1.0 + p * (m - k) / k);
}

double mf_matrix_lower(double m, double k, double p) {
  require_power(p);
  if (!(k >= 1.0) || !(m >= 1.0)) throw Error(ErrorKind::DomainError, "mf bounds need K >= 1 and M >= 1");
  return mf_mat_raw(m, k, p);
}

double mf_vector_upper(double m, double k, double p) {
  require_power(p);
  if (!(k >= 1.0) || !(m >= 1.0)) throw Error(ErrorKind::DomainError, "mf bounds need K >= 1 and M >= 1");
  return std::log2(1.0 + p * (m + 1.0) / (p * (k - 1.0) + k));
}

double wishart_inverse_trace_mean(double m, double k) {
  if (!(k >= 1.0) || k >= m) throw Error(ErrorKind::DomainError, "Wishart inverse mean needs 1 <= K < M");
  return k / (m - k);
}

RateBoundSet rate_bounds(double m, double k, double p) {
  return {zf_vector_lower(m, k, p), zf_matrix_upper(m, k, p), mf_matrix_lower(m, k, p),
          mf_vector_upper(m, k, p), m, k, p};
}

double kcross_approx(double m, double p) {
  require_power(p);
  return p * (m + 1.0) / (1.0 + p);
}

std::optional<QuadraticRoots> crossing_quadratic_roots(double m, double p) {
  require_power(p);
  const double a = 1.0 + p;
  const double b = -p * (m + 2.0);
  const double c = p * (m + 1.0);
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return std::nullopt;
  // Stable form: avoid cancellation in the smaller root.
  const double q = -0.5 * (b - std::sqrt(disc));
  return QuadraticRoots{c / q, q / a};
}

CrossPoint kcross_exact(double m, double p) {
  require_power(p);
  if (!(m >= 2.0)) throw Error(ErrorKind::DomainError, "kcross_exact needs M >= 2");

  CrossPoint cp;
  cp.k_approx = kcross_approx(m, p);

  const auto gap = [m, p](double k) { return bound_gap(m, k, p); };
  const double peak = argmax_gap(m, p);
  if (!(gap(peak) > 0.0)) return cp;

  if (gap(1.0) < 0.0) cp.k_lower_root = bisect(gap, 1.0, peak);
  if (gap(m) < 0.0) cp.k_exact = bisect(gap, peak, m);
  cp.exists = cp.k_exact.has_value();
  return cp;
}

double gradient_discriminant(double m, double p) {
  const double mp = m * p;
  return (mp - 2.0) * (mp - 2.0) - 4.0 * (p + 1.0);
}

double gradient_difference_paper(double m, double p) {
  require_power(p);
  const double disc = gradient_discriminant(m, p);
  if (disc < 0.0) throw Error(ErrorKind::DomainError, "negative discriminant in the gradient difference");
  const double mp = m * p;
  return (-disc + (mp + p - 1.0) * std::sqrt(disc)) / ((m + 1.0) * (2.0 * mp + p + 1.0));
}

double gradient_difference_numeric(double m, double p, double step) {
  if (!(step > 0.0) || !(step < 0.1)) throw Error(ErrorKind::DomainError, "step must lie in (0, 0.1)");
  const CrossPoint cp = kcross_exact(m, p);
  if (!cp.k_exact) throw Error(ErrorKind::NoCrossPoint, "no crossing in (1, M]");
  const auto sum_gap = [m, p](double k) { return k * (mf_mat_raw(m, k, p) - zf_vec_raw(m, k, p)); };
  const double k = *cp.k_exact;
  return (sum_gap(k + step) - sum_gap(k - step)) / (2.0 * step);
}

GradientReport gradient_report(double m, double p, double step) {
  GradientReport report;
  if (gradient_discriminant(m, p) >= 0.0) report.closed_form = gradient_difference_paper(m, p);
  const CrossPoint cp = kcross_exact(m, p);
  if (cp.k_exact) {
    report.evaluated_at = cp.k_exact;
    report.numeric_value = gradient_difference_numeric(m, p, step);
  }
  return report;
}

std::string_view to_string(Recommendation r) { return r == Recommendation::ZfVector ? "zf-vec" : "mf-mat"; }

Recommendation recommend_precoder(double m, double k, double p) {
  double cross = kcross_approx(m, p);
  if (m >= 2.0) {
    if (const auto cp = kcross_exact(m, p); cp.k_exact) cross = *cp.k_exact;
  }
  // A single user never needs interference suppression.
  cross = std::max(cross, 1.0);
  return k <= cross + 1e-9 ? Recommendation::ZfVector : Recommendation::MfMatrix;
}

}  // namespace nmimo::bounds
