// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/privacy/dp.hpp"

#include <algorithm>
#include <cmath>

#include "vqfl/error.hpp"

namespace vqfl::privacy {

std::string to_string(Mechanism m) {
  return m == Mechanism::Laplace ? "laplace" : "gaussian";
}

Mechanism mechanism_from_string(const std::string& name) {
  if (name == "laplace") return Mechanism::Laplace;
  if (name == "gaussian") return Mechanism::Gaussian;
  throw ConfigError("mechanism", "expected 'laplace' or 'gaussian', got '" + name + "'");
}

void DpConfig::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ConfigError("epsilon", "must be a positive finite number");
  }
  if (!(sensitivity >= 0.0) || !std::isfinite(sensitivity)) {
    throw ConfigError("sensitivity", "must be a non-negative finite number");
  }
  if (mechanism == Mechanism::Gaussian) {
    if (!delta) throw ConfigError("delta", "required by the gaussian mechanism");
  }
  if (delta && !(*delta > 0.0 && *delta < 1.0)) {
    throw ConfigError("delta", "must lie in (0, 1)");
  }
  if (decimals && *decimals < 0) throw ConfigError("decimals", "must be >= 0");
}

double noise_scale(const DpConfig& cfg) {
  cfg.validate();
  const double b = cfg.sensitivity / cfg.epsilon;
  if (cfg.mechanism == Mechanism::Laplace) return b;
  return b * std::sqrt(2.0 * std::log(1.25 / *cfg.delta));
}

ParamVector add_noise(std::span<const double> params, const DpConfig& cfg, Rng& rng) {
  const double scale = noise_scale(cfg);
  ParamVector out(params.begin(), params.end());
  for (double& v : out) {
    const double noise = cfg.mechanism == Mechanism::Laplace ? rng.laplace(scale)
                                                             : scale * rng.normal();
    v += noise;
    if (cfg.clip_nonnegative) v = std::max(v, 0.0);
    if (cfg.decimals) v = round_to(v, *cfg.decimals);
  }
  return out;
}

double round_to(double value, int decimals) {
  if (decimals < 0) throw InvalidArgument("decimals must be >= 0");
  if (!std::isfinite(value)) return value;
  const double factor = std::pow(10.0, decimals);
  const double scaled = value * factor;
  // Past 2^52 the scaled value has no fractional part left to round.
  if (!std::isfinite(scaled) || std::abs(scaled) >= 0x1.0p52) return value;
  return std::round(scaled) / factor;
}

ParamVector round_params(std::span<const double> params, int decimals) {
  ParamVector out(params.begin(), params.end());
  for (double& v : out) v = round_to(v, decimals);
  return out;
}

}  // namespace vqfl::privacy
