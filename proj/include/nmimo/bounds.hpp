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

#include <optional>
#include <string_view>

namespace nmimo::bounds {

// Closed-form per-user rate bounds, in bits/s/Hz, for M transmit antennas,
// K users and total power P. K is a real number so the curves can be
// differentiated and intersected; simulations only ever use integer K.

// log2(1 + P(M-K+1)/K); requires 1 <= K <= M.
double zf_vector_lower(double m, double k, double p);

// log2(1 + P(M-K)/K); requires 1 <= K < M.
double zf_matrix_upper(double m, double k, double p);

// log2(1 + P(M+1)/(P(K-1)+K)). The MF matrix lower bound and the MF vector
// upper bound are the same expression.
double mf_matrix_lower(double m, double k, double p);
double mf_vector_upper(double m, double k, double p);

// Analytic E[tr((HH^*)^{-1})] = K/(M-K) for a K x M CN(0,1) channel.
double wishart_inverse_trace_mean(double m, double k);

struct RateBoundSet {
  double zf_vec_lower = 0.0;
  double zf_mat_upper = 0.0;
  double mf_mat_lower = 0.0;
  double mf_vec_upper = 0.0;
  double m_antennas = 0.0;
  double k_users = 0.0;
  double power = 0.0;
};

// All four bounds at once; requires K < M.
RateBoundSet rate_bounds(double m, double k, double p);

// P(M+1)/(1+P), the large-M crossing approximation.
double kcross_approx(double m, double p);

struct QuadraticRoots {
  double lower = 0.0;
  double upper = 0.0;
};

// Real roots of (1+P)K^2 - P(M+2)K + P(M+1) = 0, the algebraic form of
// zf_vector_lower == mf_matrix_lower. Empty when the discriminant is negative.
std::optional<QuadraticRoots> crossing_quadratic_roots(double m, double p);

struct CrossPoint {
  double k_approx = 0.0;
  // Larger crossing, where MF overtakes ZF; set only when it lies in (1, M].
  std::optional<double> k_exact;
  // Crossing just above K = 1.
  std::optional<double> k_lower_root;
  bool exists = false;
};

// Locates the crossings of zf_vector_lower and mf_matrix_lower on [1, M] by
// bisection on their difference; requires M >= 2, P > 0.
CrossPoint kcross_exact(double m, double p);

// Discriminant (MP-2)^2 - 4(P+1) under the square root of the closed-form
// gradient difference.
double gradient_discriminant(double m, double p);

// Closed-form difference of the MF and ZF lower-bound gradients at the
// crossing. DomainError when the discriminant is negative.
double gradient_difference_paper(double m, double p);

// Central finite difference of d/dK [K*mf_matrix_lower - K*zf_vector_lower]
// at k_exact. NoCrossPoint when k_exact is absent.
double gradient_difference_numeric(double m, double p, double step = 1e-4);

struct GradientReport {
  std::optional<double> closed_form;
  std::optional<double> numeric_value;
  std::optional<double> evaluated_at;
};

GradientReport gradient_report(double m, double p, double step = 1e-4);

enum class Recommendation { ZfVector, MfMatrix };

std::string_view to_string(Recommendation r);

// ZF with vector normalization up to the crossing (ties included), MF with
// matrix normalization beyond it.
Recommendation recommend_precoder(double m, double k, double p);

}  // namespace nmimo::bounds
