// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "vqfl/types.hpp"

namespace vqfl::fl {

// n_k / sum(n). Throws on an empty list or a zero count.
std::vector<double> normalized_weights(std::span<const std::size_t> counts);

// sum_k (n_k / n) * params[k], coordinate-wise. Throws InvalidArgument on an
// empty list, mismatched lengths or a zero count.
ParamVector weighted_average(std::span<const ParamVector> params,
                             std::span<const std::size_t> counts);

// Coordinate-wise (a + b) / 2.
ParamVector midpoint(std::span<const double> a, std::span<const double> b);

}  // namespace vqfl::fl
