// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace vqfl {

// Flat, ordered circuit parameters (rotation angles in radians). This is the
// unit that gets trained, noised, encrypted and averaged.
using ParamVector = std::vector<double>;

}  // namespace vqfl
