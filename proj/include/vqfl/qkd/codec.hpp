// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vqfl/types.hpp"

namespace vqfl::qkd {

// Parameters as ASCII text: each value in fixed-point with `decimals`
// fractional digits (leading '-' for negatives), comma-separated, one byte
// per character. decimals must lie in [1, 17].
std::vector<std::uint8_t> serialize_params(std::span<const double> params, int decimals);

// Inverse of serialize_params. Throws InvalidArgument on malformed input.
ParamVector deserialize_params(std::span<const std::uint8_t> bytes);

}  // namespace vqfl::qkd
