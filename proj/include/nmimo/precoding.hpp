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

#include "nmimo/channel.hpp"
#include "nmimo/model.hpp"

namespace nmimo {

// Unnormalized M x K precoder F = [f_1 ... f_K].
struct RawPrecoder {
  CMatrix columns;
  Filter filter = Filter::ZF;
};

// Normalized M x K precoder G with total power sum_k ||g_k||^2 = 1.
struct PrecodingMatrix {
  CMatrix columns;
  PrecoderScheme scheme;
};

// Gram matrices with an estimated condition number above this are rejected.
inline constexpr double kSingularConditionLimit = 1e12;

// F = H^*(HH^*)^{-1}, computed by a Cholesky solve of (HH^*) X = H.
RawPrecoder zf_precoder(const ChannelMatrix& h);

// F = H^*.
RawPrecoder mf_precoder(const ChannelMatrix& h);

// g_k = f_k / (sqrt(K) ||f_k||)
PrecodingMatrix normalize_vector(const RawPrecoder& f);

// g_k = f_k / ||F||_F
PrecodingMatrix normalize_matrix(const RawPrecoder& f);

RawPrecoder raw_precoder(const ChannelMatrix& h, Filter filter);
PrecodingMatrix build_precoder(const ChannelMatrix& h, PrecoderScheme scheme);

}  // namespace nmimo
