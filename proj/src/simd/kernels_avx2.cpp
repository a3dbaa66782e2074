// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include <immintrin.h>

#include <cstdint>

#include "kernels_internal.hpp"

namespace vqfl::simd {
namespace {

// Two complex doubles per register: [re0, im0, re1, im1].

inline __m256d load2(const Complex* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline void store2(Complex* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

// v * (re + i*im) per lane pair, matching the scalar expression order.
inline __m256d cmul(__m256d v, __m256d re, __m256d im) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_addsub_pd(_mm256_mul_pd(v, re), _mm256_mul_pd(swapped, im));
}

void apply_1q_avx2(std::span<Complex> amps, unsigned target, const Mat2& m) {
  Complex* a = amps.data();
  const std::size_t n = amps.size();
  if (target == 0) {
    const __m256d re_lo = _mm256_setr_pd(m.m00.real(), m.m00.real(), m.m10.real(), m.m10.real());
    const __m256d im_lo = _mm256_setr_pd(m.m00.imag(), m.m00.imag(), m.m10.imag(), m.m10.imag());
    const __m256d re_hi = _mm256_setr_pd(m.m01.real(), m.m01.real(), m.m11.real(), m.m11.real());
    const __m256d im_hi = _mm256_setr_pd(m.m01.imag(), m.m01.imag(), m.m11.imag(), m.m11.imag());
    for (std::size_t i = 0; i < n; i += 2) {
      const __m256d v = load2(a + i);
      const __m256d lo = _mm256_permute2f128_pd(v, v, 0x00);
      const __m256d hi = _mm256_permute2f128_pd(v, v, 0x11);
      store2(a + i, _mm256_add_pd(cmul(lo, re_lo, im_lo), cmul(hi, re_hi, im_hi)));
    }
    return;
  }

  const __m256d r00 = _mm256_set1_pd(m.m00.real()), i00 = _mm256_set1_pd(m.m00.imag());
  const __m256d r01 = _mm256_set1_pd(m.m01.real()), i01 = _mm256_set1_pd(m.m01.imag());
  const __m256d r10 = _mm256_set1_pd(m.m10.real()), i10 = _mm256_set1_pd(m.m10.imag());
  const __m256d r11 = _mm256_set1_pd(m.m11.real()), i11 = _mm256_set1_pd(m.m11.imag());
  const std::size_t stride = std::size_t{1} << target;
  for (std::size_t base = 0; base < n; base += 2 * stride) {
    Complex* lo_ptr = a + base;
    Complex* hi_ptr = lo_ptr + stride;
    for (std::size_t j = 0; j < stride; j += 2) {
      const __m256d v0 = load2(lo_ptr + j);
      const __m256d v1 = load2(hi_ptr + j);
      store2(lo_ptr + j, _mm256_add_pd(cmul(v0, r00, i00), cmul(v1, r01, i01)));
      store2(hi_ptr + j, _mm256_add_pd(cmul(v0, r10, i10), cmul(v1, r11, i11)));
    }
  }
}

void probabilities_avx2(std::span<const Complex> amps, std::span<double> out) {
  const Complex* a = amps.data();
  const std::size_t n = amps.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v0 = load2(a + i);
    const __m256d v1 = load2(a + i + 2);
    // hadd gives [p0, p2, p1, p3]; reorder lanes to [p0, p1, p2, p3].
    const __m256d sums = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
    _mm256_storeu_pd(out.data() + i, _mm256_permute4x64_pd(sums, 0b11011000));
  }
  for (; i < n; ++i) {
    const double r = a[i].real(), im = a[i].imag();
    out[i] = r * r + im * im;
  }
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

double norm_squared_avx2(std::span<const Complex> amps) {
  const Complex* a = amps.data();
  const std::size_t n = amps.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = load2(a + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  double sum = hsum(acc);
  for (; i < n; ++i) sum += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return sum;
}

double expectation_z_avx2(std::span<const Complex> amps, unsigned qubit) {
  const Complex* a = amps.data();
  const std::size_t n = amps.size();
  __m256d acc = _mm256_setzero_pd();
  if (qubit == 0) {
    const __m256d sign = _mm256_setr_pd(1.0, 1.0, -1.0, -1.0);
    for (std::size_t i = 0; i < n; i += 2) {
      const __m256d v = load2(a + i);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_mul_pd(v, v), sign));
    }
    return hsum(acc);
  }
  const std::size_t stride = std::size_t{1} << qubit;
  for (std::size_t base = 0; base < n; base += 2 * stride) {
    for (std::size_t j = 0; j < stride; j += 2) {
      const __m256d v0 = load2(a + base + j);
      const __m256d v1 = load2(a + base + stride + j);
      acc = _mm256_add_pd(acc, _mm256_sub_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1)));
    }
  }
  return hsum(acc);
}

void axpy_avx2(double w, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  const __m256d wv = _mm256_set1_pd(w);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod = _mm256_mul_pd(wv, _mm256_loadu_pd(x.data() + i));
    _mm256_storeu_pd(y.data() + i, _mm256_add_pd(_mm256_loadu_pd(y.data() + i), prod));
  }
  for (; i < n; ++i) y[i] += w * x[i];
}

}  // namespace

namespace detail {
const KernelTable kAvx2Table{
    "avx2",        apply_1q_avx2, probabilities_avx2, norm_squared_avx2,
    expectation_z_avx2, axpy_avx2,
};
}  // namespace detail

}  // namespace vqfl::simd
