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

#include "nmimo/precoding.hpp"

#include <cmath>

#include "nmimo/error.hpp"

namespace nmimo {

RawPrecoder zf_precoder(const ChannelMatrix& h) {
  const CMatrix& hm = h.entries();
  if (h.users() > h.antennas())
    throw Error(ErrorKind::DimensionError,
                "ZF needs K <= M (K=" + std::to_string(h.users()) + ", M=" + std::to_string(h.antennas()) + ")");

  const CMatrix gram = hm * hm.adjoint();
  const Eigen::LLT<CMatrix> llt(gram);
  if (llt.info() != Eigen::Success)
    throw Error(ErrorKind::SingularChannel, "Gram matrix HH^* is not positive definite");
  const double rcond = llt.rcond();
  if (!(rcond > 0.0) || 1.0 / rcond > kSingularConditionLimit)
    throw Error(ErrorKind::SingularChannel, "Gram matrix condition estimate exceeds 1e12");

  // (HH^*)^{-1} H is the adjoint of H^*(HH^*)^{-1} because the Gram matrix is Hermitian.
  const CMatrix x = llt.solve(hm);
  return {x.adjoint(), Filter::ZF};
}

RawPrecoder mf_precoder(const ChannelMatrix& h) { return {h.entries().adjoint(), Filter::MF}; }

PrecodingMatrix normalize_vector(const RawPrecoder& f) {
  const auto k = f.columns.cols();
  PrecodingMatrix g{CMatrix(f.columns.rows(), k), {f.filter, Normalization::Vector}};
  const double root_k = std::sqrt(static_cast<double>(k));
  for (Eigen::Index col = 0; col < k; ++col) {
    const double norm = f.columns.col(col).norm();
    if (!(norm > 0.0)) throw Error(ErrorKind::ZeroColumn, "precoder column " + std::to_string(col) + " is zero");
    g.columns.col(col) = f.columns.col(col) / (root_k * norm);
  }
  return g;
}

PrecodingMatrix normalize_matrix(const RawPrecoder& f) {
  const double norm = f.columns.norm();
  if (!(norm > 0.0)) throw Error(ErrorKind::ZeroMatrix, "precoder has zero Frobenius norm");
  return {f.columns / norm, {f.filter, Normalization::Matrix}};
}

RawPrecoder raw_precoder(const ChannelMatrix& h, Filter filter) {
  return filter == Filter::ZF ? zf_precoder(h) : mf_precoder(h);
}

PrecodingMatrix build_precoder(const ChannelMatrix& h, PrecoderScheme scheme) {
  const RawPrecoder f = raw_precoder(h, scheme.filter);
  return scheme.normalization == Normalization::Vector ? normalize_vector(f) : normalize_matrix(f);
}

}  // namespace nmimo
