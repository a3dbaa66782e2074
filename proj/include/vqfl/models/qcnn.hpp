// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "vqfl/quantum/gate.hpp"
#include "vqfl/types.hpp"

namespace vqfl::models {

// Simplified quantum convolutional network for binary classification.
//
// The register size is a power of two. Each stage pairs up adjacent active
// qubits (kept, dropped) and applies RY(a) on kept, RY(b) on dropped,
// CX(dropped -> kept) and RZ(c) on kept, then discards the dropped qubit
// without measuring it. After log2(n) stages a single qubit (qubit 0)
// remains; its Z expectation z gives P(class 0) = (1 + z) / 2.
struct QcnnModel {
  static constexpr unsigned kNumClasses = 2;
  static constexpr unsigned kParamsPerBlock = 3;

  unsigned num_qubits = 4;
  ParamVector params;

  static std::size_t param_count(unsigned num_qubits) {
    return kParamsPerBlock * (std::size_t{num_qubits} - 1);
  }
  static QcnnModel make(unsigned num_qubits);

  void validate() const;
};

// Active qubits entering each stage, followed by the final readout set.
// For 8 qubits: {0..7}, {0,2,4,6}, {0,4}, {0}.
std::vector<std::vector<unsigned>> qcnn_active_qubits(unsigned num_qubits);

std::vector<quantum::Gate> qcnn_ansatz(const QcnnModel& model);

}  // namespace vqfl::models
