// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/qkd/bb84.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vqfl/error.hpp"
#include "vqfl/quantum/state.hpp"

namespace vqfl::qkd {
namespace {

using quantum::Gate;
using quantum::QuantumState;

// H^basis X^bit |0>
QuantumState prepare(std::uint8_t bit, Basis basis) {
  QuantumState q(1);
  if (bit) q.apply(Gate::x(0));
  if (basis == Basis::X) q.apply(Gate::h(0));
  return q;
}

// Rotate into `basis`, then measure in Z.
std::uint8_t measure_in(QuantumState q, Basis basis, Rng& rng) {
  if (basis == Basis::X) q.apply(Gate::h(0));
  return static_cast<std::uint8_t>(quantum::sample_index(q, rng));
}

char basis_char(Basis b) { return b == Basis::Z ? 'Z' : 'X'; }

}  // namespace

std::string to_string(EveKind kind) {
  switch (kind) {
    case EveKind::None: return "none";
    case EveKind::InterceptResend: return "intercept";
    case EveKind::Swap: return "swap";
    case EveKind::HalfSwap: return "halfswap";
  }
  return "?";
}

EveKind eve_from_string(const std::string& name) {
  if (name == "none") return EveKind::None;
  if (name == "intercept" || name == "intercept_resend") return EveKind::InterceptResend;
  if (name == "swap") return EveKind::Swap;
  if (name == "halfswap" || name == "half_swap") return EveKind::HalfSwap;
  throw ConfigError("eve", "expected none|intercept|swap|halfswap, got '" + name + "'");
}

void ChannelConfig::validate() const {
  if (!(flip_probability >= 0.0 && flip_probability <= 1.0)) {
    throw ConfigError("flip_probability", "must lie in [0, 1]");
  }
}

Bits quantum_random_bits(std::size_t n, Rng& rng) {
  QuantumState plus(1);
  plus.apply(Gate::h(0));
  Bits bits(n);
  for (std::size_t i = 0; i < n; ++i) {
    bits[i] = static_cast<std::uint8_t>(quantum::sample_index(plus, rng));
  }
  return bits;
}

QkdSession bb84_exchange(std::size_t n, const EveModel& eve, const ChannelConfig& channel,
                         Rng& rng) {
  if (n == 0) throw InvalidArgument("BB84 exchange needs at least one qubit");
  channel.validate();

  Rng sender_rng = rng.split("sender");
  Rng receiver_rng = rng.split("receiver");
  Rng channel_rng = rng.split("channel");
  Rng eve_rng = rng.split("eve", eve.seed);

  QkdSession s;
  s.n = n;
  s.sender_bits = quantum_random_bits(n, sender_rng);
  const Bits sender_basis_bits = quantum_random_bits(n, sender_rng);
  const Bits receiver_basis_bits = quantum_random_bits(n, receiver_rng);
  s.sender_bases.resize(n);
  s.receiver_bases.resize(n);
  s.receiver_bits.resize(n);

  s.eve_swapped = eve.kind == EveKind::Swap ||
                  (eve.kind == EveKind::HalfSwap && eve_rng.bernoulli(0.5));

  for (std::size_t j = 0; j < n; ++j) {
    s.sender_bases[j] = static_cast<Basis>(sender_basis_bits[j]);
    s.receiver_bases[j] = static_cast<Basis>(receiver_basis_bits[j]);
    QuantumState q = prepare(s.sender_bits[j], s.sender_bases[j]);

    if (eve.kind == EveKind::InterceptResend) {
      const auto eve_basis = static_cast<Basis>(eve_rng.below(2));
      const std::uint8_t seen = measure_in(q, eve_basis, eve_rng);
      q = prepare(seen, eve_basis);
    } else if (s.eve_swapped) {
      const auto fake_bit = static_cast<std::uint8_t>(eve_rng.below(2));
      const auto fake_basis = static_cast<Basis>(eve_rng.below(2));
      q = prepare(fake_bit, fake_basis);
    }

    std::uint8_t r = measure_in(q, s.receiver_bases[j], receiver_rng);
    if (channel.flip_probability > 0.0 && channel_rng.bernoulli(channel.flip_probability)) {
      r ^= 1u;
    }
    s.receiver_bits[j] = r;

    if (s.sender_bases[j] == s.receiver_bases[j]) {
      s.sifted_indices.push_back(j);
      s.sender_key.push_back(s.sender_bits[j]);
      s.receiver_key.push_back(r);
    }
  }
  return s;
}

TestReport run_test_count(const QkdSession& session, std::size_t test_count,
                          std::size_t n_allowed, Rng& rng) {
  const std::size_t sifted = session.sifted_indices.size();
  TestReport report;
  report.n_allowed = n_allowed;
  const std::size_t count = std::min(test_count, sifted);

  std::vector<std::size_t> positions = rng.sample_indices(sifted, count);
  std::sort(positions.begin(), positions.end());
  std::vector<bool> disclosed(sifted, false);
  for (std::size_t p : positions) {
    disclosed[p] = true;
    report.tested_indices.push_back(session.sifted_indices[p]);
    if (session.sender_key[p] != session.receiver_key[p]) ++report.error_count;
  }
  report.qber = count == 0 ? 0.0
                           : static_cast<double>(report.error_count) / static_cast<double>(count);
  report.passed = report.error_count <= n_allowed;

  for (std::size_t p = 0; p < sifted; ++p) {
    if (disclosed[p]) continue;
    report.sender_key.push_back(session.sender_key[p]);
    report.receiver_key.push_back(session.receiver_key[p]);
  }
  return report;
}

TestReport run_test(const QkdSession& session, double test_fraction, std::size_t n_allowed,
                    Rng& rng) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw InvalidArgument("test_fraction must lie in (0, 1)");
  }
  const std::size_t sifted = session.sifted_indices.size();
  auto count = static_cast<std::size_t>(std::ceil(test_fraction * static_cast<double>(sifted)));
  if (sifted > 0) count = std::clamp<std::size_t>(count, 1, sifted);
  return run_test_count(session, count, n_allowed, rng);
}

std::string session_dump(const QkdSession& session) {
  std::vector<bool> sifted(session.n, false);
  for (std::size_t j : session.sifted_indices) sifted[j] = true;
  std::ostringstream out;
  out << "index,sender_bit,sender_basis,receiver_basis,receiver_bit,sifted\n";
  for (std::size_t j = 0; j < session.n; ++j) {
    out << j << ',' << int{session.sender_bits[j]} << ',' << basis_char(session.sender_bases[j])
        << ',' << basis_char(session.receiver_bases[j]) << ','
        << int{session.receiver_bits[j]} << ',' << (sifted[j] ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace vqfl::qkd
