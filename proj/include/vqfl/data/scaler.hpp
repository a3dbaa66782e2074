// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "vqfl/models/dataset.hpp"

namespace vqfl::data {

enum class ScalerKind { Standard, MinMax };

std::string to_string(ScalerKind kind);

struct ScalerParams {
  ScalerKind kind = ScalerKind::Standard;
  std::vector<double> center;  // mean (Standard) or min (MinMax)
  std::vector<double> spread;  // population std (Standard) or max (MinMax)
  double lo = 0.0;             // MinMax output range
  double hi = 1.0;
};

// Standard: (x - mean) / std with the population std; a constant feature
// maps to 0. MinMax: affine map of [min, max] onto [lo, hi]; a constant
// feature maps to the midpoint of [lo, hi].
ScalerParams scaler_fit(const models::LabeledDataset& data, ScalerKind kind, double lo = 0.0,
                        double hi = 1.0);
models::LabeledDataset scaler_transform(const models::LabeledDataset& data,
                                        const ScalerParams& params);
// Exact inverse on non-degenerate features; degenerate ones map back to the
// fitted constant.
models::LabeledDataset scaler_inverse(const models::LabeledDataset& data,
                                      const ScalerParams& params);

}  // namespace vqfl::data
