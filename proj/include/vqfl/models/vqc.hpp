// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "vqfl/quantum/gate.hpp"
#include "vqfl/types.hpp"

namespace vqfl::models {

// Variational quantum classifier: RY angle encoding followed by
// `num_layers` blocks of (RY on every qubit, CX ring i -> i+1 mod n) and a
// closing RY layer. Parameters are laid out layer-major,
// params[layer * num_qubits + qubit].
//
// Class c collects the probability of every basis index b with b mod C == c.
struct VqcModel {
  unsigned num_qubits = 2;
  unsigned num_layers = 1;
  unsigned num_classes = 2;
  ParamVector params;

  static std::size_t param_count(unsigned num_qubits, unsigned num_layers) {
    return std::size_t{num_qubits} * (num_layers + 1);
  }

  // Zero-initialised parameters of the right length.
  static VqcModel make(unsigned num_qubits, unsigned num_layers, unsigned num_classes);

  void validate() const;
};

// One RY(x_i) per qubit. Features are expected to be pre-scaled into
// [-pi, pi].
std::vector<quantum::Gate> encode_features(std::span<const double> x, unsigned num_qubits);

std::vector<quantum::Gate> vqc_ansatz(const VqcModel& model);

}  // namespace vqfl::models
