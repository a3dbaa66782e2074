// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/quantum/state.hpp"

#include <bit>
#include <cmath>

#include "vqfl/error.hpp"

namespace vqfl::quantum {
namespace {

void check_qubits(unsigned n) {
  if (n == 0 || n > kMaxQubits) {
    throw InvalidArgument("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                          "], got " + std::to_string(n));
  }
}

}  // namespace

QuantumState::QuantumState(unsigned num_qubits) : num_qubits_(num_qubits) {
  check_qubits(num_qubits);
  amps_.assign(std::size_t{1} << num_qubits, Complex(0.0));
  amps_[0] = 1.0;
}

QuantumState QuantumState::basis(unsigned num_qubits, std::size_t index) {
  QuantumState s(num_qubits);
  if (index >= s.dimension()) throw InvalidArgument("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

QuantumState QuantumState::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw InvalidArgument("amplitude count must be a power of two >= 2");
  }
  const auto n = static_cast<unsigned>(std::countr_zero(dim));
  check_qubits(n);
  QuantumState s(n, std::move(amplitudes));
  if (std::abs(s.norm_squared() - 1.0) > 1e-10) {
    throw InvalidArgument("amplitudes are not normalised");
  }
  return s;
}

double QuantumState::norm_squared() const noexcept {
  return simd::active_kernels().norm_squared(amps_);
}

void QuantumState::apply(const Gate& gate) {
  gate.validate(num_qubits_);
  const auto [a, b] = gate.targets;
  switch (gate.kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
      simd::active_kernels().apply_1q(amps_, a, gate.matrix());
      break;
    case GateKind::CX:
      simd::apply_cx(amps_, a, b);
      break;
    case GateKind::CZ:
      simd::apply_cz(amps_, a, b);
      break;
    case GateKind::CRZ:
      simd::apply_controlled_1q(amps_, a, b, gate.matrix());
      break;
  }
}

void QuantumState::apply(std::span<const Gate> gates) {
  for (const Gate& g : gates) apply(g);
}

QuantumState apply_gate(QuantumState state, const Gate& gate) {
  state.apply(gate);
  return state;
}

QuantumState run_circuit(const CircuitSpec& circuit, QuantumState initial) {
  if (circuit.num_qubits != initial.num_qubits()) {
    throw InvalidArgument("circuit has " + std::to_string(circuit.num_qubits) +
                          " qubits but the state has " +
                          std::to_string(initial.num_qubits()));
  }
  initial.apply(circuit.gates);
  return initial;
}

std::vector<double> probabilities(const QuantumState& state) {
  std::vector<double> out(state.dimension());
  simd::active_kernels().probabilities(state.amplitudes(), out);
  return out;
}

std::size_t sample_index(const QuantumState& state, Rng& rng) {
  const std::vector<double> probs = probabilities(state);
  const double u = rng.uniform();
  double cumulative = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    cumulative += probs[i];
    last_nonzero = i;
    if (u < cumulative) return i;
  }
  // u landed in the rounding slack above the cumulative sum.
  return last_nonzero;
}

std::string measure_all(const QuantumState& state, Rng& rng) {
  const std::size_t index = sample_index(state, rng);
  std::string bits(state.num_qubits(), '0');
  for (unsigned q = 0; q < state.num_qubits(); ++q) {
    if ((index >> q) & 1u) bits[q] = '1';
  }
  return bits;
}

double expectation_z(const QuantumState& state, unsigned qubit) {
  if (qubit >= state.num_qubits()) {
    throw InvalidArgument("qubit " + std::to_string(qubit) + " out of range");
  }
  return simd::active_kernels().expectation_z(state.amplitudes(), qubit);
}

}  // namespace vqfl::quantum
