// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "vqfl/privacy/dp.hpp"
#include "vqfl/qkd/bb84.hpp"
#include "vqfl/qkd/cipher.hpp"
#include "vqfl/rng.hpp"
#include "vqfl/types.hpp"

namespace vqfl::fl {

struct QkdLinkConfig {
  bool enabled = false;
  qkd::CipherKind cipher = qkd::CipherKind::Shift256;
  qkd::ChannelConfig channel;
  qkd::EveModel eve;
  double test_fraction = 0.1;
  std::size_t n_allowed = 0;
  int max_attempts = 5;
  // Qubits sent per exchange = oversample * (key bits needed).
  std::size_t oversample = 3;
};

struct LinkConfig {
  int decimals = 12;  // serialization precision
  QkdLinkConfig qkd;
};

struct SharedKey {
  qkd::Bytes sender;
  qkd::Bytes receiver;
  qkd::TestReport report;
  std::size_t qubits = 0;
};

// One BB84 exchange sized for `bytes` of key, followed by the test. Returns
// nothing when the test fails or too few undisclosed bits survive.
std::optional<SharedKey> try_establish_key(std::size_t bytes, const QkdLinkConfig& cfg, Rng& rng);

struct Transmission {
  qkd::Bytes payload;     // what crosses the classical channel
  ParamVector recovered;  // what the receiving side decodes
  int attempts = 0;       // QKD attempts used (0 without QKD)
  std::size_t qubits = 0; // qubits exchanged across all attempts
};

// Pipeline: DP noise (when `dp` is set) -> serialize -> encrypt with a fresh
// QKD key (when enabled) -> decrypt -> deserialize. DP and QKD draw from
// separate child streams of `rng`, so enabling one never changes the other's
// randomness. Throws RuntimeAbort when no usable key is obtained within
// max_attempts exchanges.
Transmission secure_uplink(std::span<const double> params, const privacy::DpConfig* dp,
                           const LinkConfig& link, Rng& rng);

// Server-to-client broadcast: the same pipeline without DP.
Transmission secure_downlink(std::span<const double> params, const LinkConfig& link, Rng& rng);

}  // namespace vqfl::fl
