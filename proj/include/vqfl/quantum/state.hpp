// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "vqfl/quantum/gate.hpp"
#include "vqfl/rng.hpp"

namespace vqfl::quantum {

using Complex = std::complex<double>;

// Largest register the simulator accepts; 2^20 amplitudes is 16 MiB.
inline constexpr unsigned kMaxQubits = 20;

// Dense state vector over 2^n basis states, little-endian: qubit q is bit q
// of the basis index.
class QuantumState {
 public:
  // |0...0>
  explicit QuantumState(unsigned num_qubits);

  static QuantumState basis(unsigned num_qubits, std::size_t index);
  // Throws unless the length is a power of two and the vector is normalised
  // within 1e-10.
  static QuantumState from_amplitudes(std::vector<Complex> amplitudes);

  unsigned num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const noexcept;

  // In-place variants used on hot paths.
  void apply(const Gate& gate);
  void apply(std::span<const Gate> gates);

 private:
  QuantumState(unsigned num_qubits, std::vector<Complex> amps)
      : num_qubits_(num_qubits), amps_(std::move(amps)) {}

  unsigned num_qubits_;
  std::vector<Complex> amps_;
};

QuantumState apply_gate(QuantumState state, const Gate& gate);
QuantumState run_circuit(const CircuitSpec& circuit, QuantumState initial);

std::vector<double> probabilities(const QuantumState& state);

// Samples one basis state; the returned string lists qubit 0 first.
std::string measure_all(const QuantumState& state, Rng& rng);
// Same draw as an index into the basis.
std::size_t sample_index(const QuantumState& state, Rng& rng);

double expectation_z(const QuantumState& state, unsigned qubit);

}  // namespace vqfl::quantum
