// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/data/scaler.hpp"

#include <algorithm>
#include <cmath>

#include "vqfl/error.hpp"

namespace vqfl::data {

std::string to_string(ScalerKind kind) {
  return kind == ScalerKind::Standard ? "standard" : "minmax";
}

ScalerParams scaler_fit(const models::LabeledDataset& data, ScalerKind kind, double lo,
                        double hi) {
  if (data.empty()) throw InvalidArgument("cannot fit a scaler on an empty dataset");
  if (kind == ScalerKind::MinMax && !(lo < hi)) {
    throw InvalidArgument("MinMax range needs lo < hi");
  }
  const std::size_t d = data.num_features();
  const auto n = static_cast<double>(data.size());
  ScalerParams p{kind, std::vector<double>(d, 0.0), std::vector<double>(d, 0.0), lo, hi};
  if (kind == ScalerKind::Standard) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      const auto r = data.row(i);
      for (std::size_t j = 0; j < d; ++j) p.center[j] += r[j];
    }
    for (double& m : p.center) m /= n;
    for (std::size_t i = 0; i < data.size(); ++i) {
      const auto r = data.row(i);
      for (std::size_t j = 0; j < d; ++j) {
        const double dev = r[j] - p.center[j];
        p.spread[j] += dev * dev;
      }
    }
    for (double& s : p.spread) s = std::sqrt(s / n);
  } else {
    const auto first = data.row(0);
    p.center.assign(first.begin(), first.end());
    p.spread.assign(first.begin(), first.end());
    for (std::size_t i = 1; i < data.size(); ++i) {
      const auto r = data.row(i);
      for (std::size_t j = 0; j < d; ++j) {
        p.center[j] = std::min(p.center[j], r[j]);
        p.spread[j] = std::max(p.spread[j], r[j]);
      }
    }
  }
  return p;
}

models::LabeledDataset scaler_transform(const models::LabeledDataset& data,
                                        const ScalerParams& params) {
  const std::size_t d = data.num_features();
  if (params.center.size() != d) throw InvalidArgument("scaler was fitted on a different width");
  models::LabeledDataset out = data;
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto r = out.row(i);
    for (std::size_t j = 0; j < d; ++j) {
      if (params.kind == ScalerKind::Standard) {
        r[j] = params.spread[j] > 0.0 ? (r[j] - params.center[j]) / params.spread[j] : 0.0;
      } else {
        const double width = params.spread[j] - params.center[j];
        r[j] = width > 0.0
                   ? params.lo + (r[j] - params.center[j]) / width * (params.hi - params.lo)
                   : 0.5 * (params.lo + params.hi);
      }
    }
  }
  return out;
}

models::LabeledDataset scaler_inverse(const models::LabeledDataset& data,
                                      const ScalerParams& params) {
  const std::size_t d = data.num_features();
  if (params.center.size() != d) throw InvalidArgument("scaler was fitted on a different width");
  models::LabeledDataset out = data;
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto r = out.row(i);
    for (std::size_t j = 0; j < d; ++j) {
      if (params.kind == ScalerKind::Standard) {
        r[j] = params.spread[j] > 0.0 ? r[j] * params.spread[j] + params.center[j]
                                      : params.center[j];
      } else {
        const double width = params.spread[j] - params.center[j];
        r[j] = width > 0.0 ? params.center[j] + (r[j] - params.lo) / (params.hi - params.lo) * width
                           : params.center[j];
      }
    }
  }
  return out;
}

}  // namespace vqfl::data
