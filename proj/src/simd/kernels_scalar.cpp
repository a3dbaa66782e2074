// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>

#include "kernels_internal.hpp"

namespace vqfl::simd {
namespace {

// Complex products are written out by component so the AVX2 path can match
// them operation for operation (std::complex operator* adds NaN recovery).
struct Parts {
  double re, im;
};

inline Parts mul(double ar, double ai, Complex m) {
  return {ar * m.real() - ai * m.imag(), ai * m.real() + ar * m.imag()};
}

inline void mix_pair(Complex& a0, Complex& a1, const Mat2& m) {
  const double r0 = a0.real(), i0 = a0.imag();
  const double r1 = a1.real(), i1 = a1.imag();
  const Parts p00 = mul(r0, i0, m.m00), p01 = mul(r1, i1, m.m01);
  const Parts p10 = mul(r0, i0, m.m10), p11 = mul(r1, i1, m.m11);
  a0 = Complex(p00.re + p01.re, p00.im + p01.im);
  a1 = Complex(p10.re + p11.re, p10.im + p11.im);
}

void apply_1q_scalar(std::span<Complex> amps, unsigned target, const Mat2& m) {
  const std::size_t stride = std::size_t{1} << target;
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
    for (std::size_t j = 0; j < stride; ++j) {
      mix_pair(amps[base + j], amps[base + j + stride], m);
    }
  }
}

void probabilities_scalar(std::span<const Complex> amps, std::span<double> out) {
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double r = amps[i].real(), im = amps[i].imag();
    out[i] = r * r + im * im;
  }
}

double norm_squared_scalar(std::span<const Complex> amps) {
  double sum = 0.0;
  for (const Complex& a : amps) sum += a.real() * a.real() + a.imag() * a.imag();
  return sum;
}

double expectation_z_scalar(std::span<const Complex> amps, unsigned qubit) {
  const std::size_t mask = std::size_t{1} << qubit;
  double sum = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    sum += (i & mask) ? -p : p;
  }
  return sum;
}

void axpy_scalar(double w, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += w * x[i];
}

}  // namespace

namespace detail {
const KernelTable kScalarTable{
    "scalar",        apply_1q_scalar, probabilities_scalar, norm_squared_scalar,
    expectation_z_scalar, axpy_scalar,
};
}  // namespace detail

void apply_controlled_1q(std::span<Complex> amps, unsigned control,
                         unsigned target, const Mat2& m) {
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & cmask) && !(i & tmask)) mix_pair(amps[i], amps[i | tmask], m);
  }
}

void apply_cx(std::span<Complex> amps, unsigned control, unsigned target) {
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & cmask) && !(i & tmask)) std::swap(amps[i], amps[i | tmask]);
  }
}

void apply_cz(std::span<Complex> amps, unsigned a, unsigned b) {
  const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & mask) == mask) amps[i] = -amps[i];
  }
}

}  // namespace vqfl::simd
