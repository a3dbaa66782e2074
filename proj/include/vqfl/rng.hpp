// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace vqfl {

// Counter-based generator (Philox4x32-10). A stream is identified by its
// 64-bit key; `split` derives child streams by hashing a label into the key,
// so every client, round and purpose can get an independent stream from one
// root seed without any shared state.
//
// All distributions are implemented here rather than through <random> so the
// sequences are identical across standard library implementations.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed = 0) noexcept;

  Rng split(std::string_view label, std::uint64_t index = 0) const noexcept;

  std::uint64_t key() const noexcept { return key_; }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() noexcept;

  // [0, 1) with 53 random bits.
  double uniform() noexcept;
  // (0, 1), never returns an endpoint.
  double uniform_open() noexcept;
  double uniform(double lo, double hi) noexcept;
  // Unbiased integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) noexcept;
  bool bernoulli(double p) noexcept;
  double normal() noexcept;
  double laplace(double scale) noexcept;

  template <typename T>
  void shuffle(std::span<T> values) noexcept {
    for (std::size_t i = values.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

  // `count` distinct indices from [0, n), in selection order.
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t count);

 private:
  void refill() noexcept;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  unsigned used_ = 4;  // 32-bit words consumed from block_
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace vqfl
