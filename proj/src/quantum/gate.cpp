// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/quantum/gate.hpp"

#include <cmath>
#include <numbers>

#include "vqfl/error.hpp"

namespace vqfl::quantum {

bool is_two_qubit(GateKind kind) noexcept {
  return kind == GateKind::CX || kind == GateKind::CZ || kind == GateKind::CRZ;
}

bool is_rotation(GateKind kind) noexcept {
  return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ ||
         kind == GateKind::CRZ;
}

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CX: return "CX";
    case GateKind::CZ: return "CZ";
    case GateKind::CRZ: return "CRZ";
  }
  return "?";
}

void Gate::validate(unsigned num_qubits) const {
  const unsigned arity = is_two_qubit(kind) ? 2 : 1;
  for (unsigned i = 0; i < arity; ++i) {
    if (targets[i] >= num_qubits) {
      throw InvalidArgument(to_string(kind) + " target " + std::to_string(targets[i]) +
                            " out of range for " + std::to_string(num_qubits) + " qubits");
    }
  }
  if (arity == 2 && targets[0] == targets[1]) {
    throw InvalidArgument(to_string(kind) + " targets must be distinct");
  }
  if (is_rotation(kind) && !std::isfinite(angle)) {
    throw InvalidArgument(to_string(kind) + " angle must be finite");
  }
}

Gate Gate::inverse() const {
  Gate inv = *this;
  if (is_rotation(kind)) inv.angle = -angle;
  return inv;
}

simd::Mat2 Gate::matrix() const {
  using C = simd::Complex;
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  switch (kind) {
    case GateKind::H: {
      const double r = std::numbers::sqrt2 / 2.0;
      return {C(r), C(r), C(r), C(-r)};
    }
    case GateKind::X:
    case GateKind::CX:
      return {C(0), C(1), C(1), C(0)};
    case GateKind::RX:
      return {C(c), C(0, -s), C(0, -s), C(c)};
    case GateKind::RY:
      return {C(c), C(-s), C(s), C(c)};
    case GateKind::RZ:
    case GateKind::CRZ:
      return {C(c, -s), C(0), C(0), C(c, s)};
    case GateKind::CZ:
      return {C(1), C(0), C(0), C(-1)};
  }
  return {};
}

void CircuitSpec::validate() const {
  if (num_qubits == 0) throw InvalidArgument("circuit needs at least one qubit");
  for (const Gate& g : gates) g.validate(num_qubits);
}

}  // namespace vqfl::quantum
