// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/fl/secure_channel.hpp"

#include <algorithm>
#include <string>

#include "vqfl/error.hpp"
#include "vqfl/qkd/codec.hpp"

namespace vqfl::fl {

std::optional<SharedKey> try_establish_key(std::size_t bytes, const QkdLinkConfig& cfg, Rng& rng) {
  const std::size_t needed_bits = 8 * bytes;
  const std::size_t n = std::max<std::size_t>(16, cfg.oversample * needed_bits);
  Rng exchange_rng = rng.split("exchange");
  Rng test_rng = rng.split("test");
  const qkd::QkdSession session = qkd::bb84_exchange(n, cfg.eve, cfg.channel, exchange_rng);
  qkd::TestReport report = qkd::run_test(session, cfg.test_fraction, cfg.n_allowed, test_rng);
  if (!report.passed || report.sender_key.size() < needed_bits) return std::nullopt;
  SharedKey key;
  key.sender = qkd::fit_key_to_message(report.sender_key, bytes);
  key.receiver = qkd::fit_key_to_message(report.receiver_key, bytes);
  key.report = std::move(report);
  key.qubits = n;
  return key;
}

namespace {

Transmission transmit(std::span<const double> params, const LinkConfig& link, Rng& rng) {
  Transmission tx;
  const qkd::Bytes plain = qkd::serialize_params(params, link.decimals);
  if (!link.qkd.enabled) {
    tx.payload = plain;
    tx.recovered = qkd::deserialize_params(tx.payload);
    return tx;
  }

  Rng qkd_rng = rng.split("qkd");
  std::string last_failure = "test failed";
  for (int attempt = 0; attempt < link.qkd.max_attempts; ++attempt) {
    ++tx.attempts;
    Rng attempt_rng = qkd_rng.split("attempt", static_cast<std::uint64_t>(attempt));
    const std::optional<SharedKey> key = try_establish_key(plain.size(), link.qkd, attempt_rng);
    if (!key) {
      last_failure = "eavesdropping test failed or key too short";
      continue;
    }
    tx.qubits += key->qubits;
    qkd::Bytes cipher = qkd::encrypt(link.qkd.cipher, plain, key->sender);
    const qkd::Bytes decoded = qkd::decrypt(link.qkd.cipher, cipher, key->receiver);
    try {
      tx.recovered = qkd::deserialize_params(decoded);
    } catch (const InvalidArgument&) {
      // Key disagreement that slipped past the test garbles the payload.
      last_failure = "payload did not decode";
      continue;
    }
    if (tx.recovered.size() != params.size()) {
      last_failure = "payload decoded to the wrong length";
      continue;
    }
    tx.payload = std::move(cipher);
    return tx;
  }
  throw RuntimeAbort("QKD link aborted after " + std::to_string(link.qkd.max_attempts) +
                     " attempts: " + last_failure);
}

}  // namespace

Transmission secure_uplink(std::span<const double> params, const privacy::DpConfig* dp,
                           const LinkConfig& link, Rng& rng) {
  if (dp == nullptr) return transmit(params, link, rng);
  Rng dp_rng = rng.split("dp");
  const ParamVector noisy = privacy::add_noise(params, *dp, dp_rng);
  return transmit(noisy, link, rng);
}

Transmission secure_downlink(std::span<const double> params, const LinkConfig& link, Rng& rng) {
  return transmit(params, link, rng);
}

}  // namespace vqfl::fl
