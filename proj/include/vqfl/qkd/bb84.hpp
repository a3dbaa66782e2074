// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vqfl/rng.hpp"

namespace vqfl::qkd {

using Bits = std::vector<std::uint8_t>;  // one 0/1 value per element

enum class Basis : std::uint8_t { Z = 0, X = 1 };

enum class EveKind { None, InterceptResend, Swap, HalfSwap };

std::string to_string(EveKind kind);
EveKind eve_from_string(const std::string& name);

// Adversary on the quantum channel.
//  InterceptResend: measure each qubit in a random basis, resend the outcome
//    prepared in that basis.
//  Swap: keep every qubit and forward a fresh random BB84 state instead.
//  HalfSwap: one fair coin per session decides between leaving the channel
//    untouched and running Swap on every qubit.
struct EveModel {
  EveKind kind = EveKind::None;
  std::uint64_t seed = 0;
};

struct ChannelConfig {
  double flip_probability = 0.0;  // classical flip of the receiver's outcome

  void validate() const;
};

struct QkdSession {
  std::size_t n = 0;
  Bits sender_bits;
  std::vector<Basis> sender_bases;
  std::vector<Basis> receiver_bases;
  Bits receiver_bits;
  std::vector<std::size_t> sifted_indices;
  Bits sender_key;
  Bits receiver_key;
  bool eve_swapped = false;  // HalfSwap coin outcome (always true for Swap)
};

struct TestReport {
  std::vector<std::size_t> tested_indices;  // qubit positions, ascending
  std::size_t error_count = 0;
  double qber = 0.0;
  std::size_t n_allowed = 0;
  bool passed = true;
  // Sifted key bits that were not disclosed by the test.
  Bits sender_key;
  Bits receiver_key;
};

// n bits, each from preparing H|0> and measuring in Z.
Bits quantum_random_bits(std::size_t n, Rng& rng);

// Full prepare / (attack) / measure / sift simulation of n qubits.
QkdSession bb84_exchange(std::size_t n, const EveModel& eve, const ChannelConfig& channel,
                         Rng& rng);

// Discloses ceil(test_fraction * |S|) random sifted positions (at least one
// when |S| >= 1) and compares them.
TestReport run_test(const QkdSession& session, double test_fraction, std::size_t n_allowed,
                    Rng& rng);
// Same, disclosing exactly min(test_count, |S|) positions.
TestReport run_test_count(const QkdSession& session, std::size_t test_count,
                          std::size_t n_allowed, Rng& rng);

// Comma-separated dump, one row per qubit:
// index,sender_bit,sender_basis,receiver_basis,receiver_bit,sifted
std::string session_dump(const QkdSession& session);

}  // namespace vqfl::qkd
