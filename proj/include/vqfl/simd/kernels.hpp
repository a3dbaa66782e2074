// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// State-vector and parameter-vector inner loops.
//
// Every kernel has a scalar reference implementation. On x86-64 an AVX2
// variant is compiled into a separate translation unit and chosen at runtime
// when the CPU reports AVX2 support. Element-wise kernels (gate application,
// probabilities, axpy) produce bit-identical results on both paths because
// the AVX2 code evaluates the same expressions in the same order and is built
// without FMA contraction. Reductions (norm, Z expectation) sum in a different
// order and agree only to rounding.
//
// Setting the environment variable VQFL_SIMD=scalar forces the reference path.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace vqfl::simd {

using Complex = std::complex<double>;

// Row-major 2x2 complex matrix.
struct Mat2 {
  Complex m00, m01, m10, m11;
};

struct KernelTable {
  std::string_view name;

  // amps[i], amps[i | 1<<target] <- m * (amps[i], amps[i | 1<<target]) for
  // every i with bit `target` clear.
  void (*apply_1q)(std::span<Complex> amps, unsigned target, const Mat2& m);

  // out[i] = |amps[i]|^2; out.size() == amps.size().
  void (*probabilities)(std::span<const Complex> amps, std::span<double> out);

  double (*norm_squared)(std::span<const Complex> amps);

  // sum_i |amps[i]|^2 * (bit `qubit` of i ? -1 : +1)
  double (*expectation_z)(std::span<const Complex> amps, unsigned qubit);

  // y[i] += w * x[i]
  void (*axpy)(double w, std::span<const double> x, std::span<double> y);
};

const KernelTable& scalar_kernels() noexcept;

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels() noexcept;

// The table selected for this process (AVX2 when available, else scalar).
const KernelTable& active_kernels() noexcept;

// Scalar-only helpers; these are permutations or sparse phase updates with
// no arithmetic worth vectorising.
void apply_controlled_1q(std::span<Complex> amps, unsigned control,
                         unsigned target, const Mat2& m);
void apply_cx(std::span<Complex> amps, unsigned control, unsigned target);
void apply_cz(std::span<Complex> amps, unsigned a, unsigned b);

}  // namespace vqfl::simd
