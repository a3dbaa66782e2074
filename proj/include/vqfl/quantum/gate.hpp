// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "vqfl/simd/kernels.hpp"

namespace vqfl::quantum {

enum class GateKind { H, X, RX, RY, RZ, CX, CZ, CRZ };

bool is_two_qubit(GateKind kind) noexcept;
bool is_rotation(GateKind kind) noexcept;
std::string to_string(GateKind kind);

// One gate instance. For two-qubit kinds targets[0] is the control
// (CZ is symmetric).
struct Gate {
  GateKind kind = GateKind::H;
  std::array<unsigned, 2> targets{0, 0};
  double angle = 0.0;  // radians; used only by rotation kinds

  static Gate h(unsigned q) { return {GateKind::H, {q, q}, 0.0}; }
  static Gate x(unsigned q) { return {GateKind::X, {q, q}, 0.0}; }
  static Gate rx(unsigned q, double theta) { return {GateKind::RX, {q, q}, theta}; }
  static Gate ry(unsigned q, double theta) { return {GateKind::RY, {q, q}, theta}; }
  static Gate rz(unsigned q, double theta) { return {GateKind::RZ, {q, q}, theta}; }
  static Gate cx(unsigned control, unsigned target) { return {GateKind::CX, {control, target}, 0.0}; }
  static Gate cz(unsigned a, unsigned b) { return {GateKind::CZ, {a, b}, 0.0}; }
  static Gate crz(unsigned control, unsigned target, double theta) {
    return {GateKind::CRZ, {control, target}, theta};
  }

  // Throws InvalidArgument when a target is out of range or the two targets
  // of a two-qubit gate coincide.
  void validate(unsigned num_qubits) const;

  // The gate that undoes this one.
  Gate inverse() const;

  // 2x2 unitary acting on the target (the controlled part for CRZ).
  simd::Mat2 matrix() const;
};

struct CircuitSpec {
  unsigned num_qubits = 1;
  std::vector<Gate> gates;

  void validate() const;
};

}  // namespace vqfl::quantum
