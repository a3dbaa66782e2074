// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>

#include "vqfl/rng.hpp"
#include "vqfl/types.hpp"

namespace vqfl::privacy {

enum class Mechanism { Laplace, Gaussian };

std::string to_string(Mechanism m);
Mechanism mechanism_from_string(const std::string& name);

struct DpConfig {
  Mechanism mechanism = Mechanism::Laplace;
  double epsilon = 1.0;
  std::optional<double> delta;  // required by the Gaussian mechanism
  double sensitivity = 1.0;
  bool clip_nonnegative = true;
  std::optional<int> decimals;  // round after clipping when set

  // Throws ConfigError naming the offending field.
  void validate() const;
};

// Laplace: b = sensitivity / epsilon.
// Gaussian: sigma = (sensitivity / epsilon) * sqrt(2 ln(1.25 / delta)).
double noise_scale(const DpConfig& cfg);

// theta + i.i.d. noise at noise_scale(cfg), then max(., 0) per coordinate
// when clip_nonnegative, then rounding to `decimals` when set.
ParamVector add_noise(std::span<const double> params, const DpConfig& cfg, Rng& rng);

// Half-away-from-zero rounding to `decimals` fractional digits.
double round_to(double value, int decimals);
ParamVector round_params(std::span<const double> params, int decimals);

}  // namespace vqfl::privacy
