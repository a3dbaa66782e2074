// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/fl/aggregation.hpp"

#include <string>

#include "vqfl/error.hpp"
#include "vqfl/simd/kernels.hpp"

namespace vqfl::fl {

std::vector<double> normalized_weights(std::span<const std::size_t> counts) {
  if (counts.empty()) throw InvalidArgument("no sample counts to weight");
  double total = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) throw InvalidArgument("sample counts must be positive");
    total += static_cast<double>(c);
  }
  std::vector<double> w;
  w.reserve(counts.size());
  for (std::size_t c : counts) w.push_back(static_cast<double>(c) / total);
  return w;
}

ParamVector weighted_average(std::span<const ParamVector> params,
                             std::span<const std::size_t> counts) {
  if (params.empty()) throw InvalidArgument("cannot average an empty parameter list");
  if (params.size() != counts.size()) {
    throw InvalidArgument(std::to_string(params.size()) + " parameter vectors but " +
                          std::to_string(counts.size()) + " sample counts");
  }
  const std::size_t dim = params.front().size();
  for (const ParamVector& p : params) {
    if (p.size() != dim) throw InvalidArgument("parameter vectors differ in length");
  }
  const std::vector<double> w = normalized_weights(counts);
  ParamVector out(dim, 0.0);
  const auto& k = simd::active_kernels();
  for (std::size_t i = 0; i < params.size(); ++i) k.axpy(w[i], params[i], out);
  return out;
}

ParamVector midpoint(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InvalidArgument("midpoint of vectors of different length");
  ParamVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = 0.5 * (a[i] + b[i]);
  return out;
}

}  // namespace vqfl::fl
