// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "vqfl/simd/kernels.hpp"

namespace vqfl::simd::detail {

extern const KernelTable kScalarTable;
#if defined(VQFL_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif

}  // namespace vqfl::simd::detail
