// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/models/qcnn.hpp"

#include <bit>
#include <string>

#include "vqfl/error.hpp"
#include "vqfl/quantum/state.hpp"

namespace vqfl::models {

QcnnModel QcnnModel::make(unsigned num_qubits) {
  QcnnModel m{num_qubits, ParamVector(param_count(num_qubits), 0.0)};
  m.validate();
  return m;
}

void QcnnModel::validate() const {
  if (num_qubits < 2 || num_qubits > quantum::kMaxQubits || !std::has_single_bit(num_qubits)) {
    throw InvalidArgument("QCNN num_qubits must be a power of two >= 2, got " +
                          std::to_string(num_qubits));
  }
  if (params.size() != param_count(num_qubits)) {
    throw InvalidArgument("QCNN expects " + std::to_string(param_count(num_qubits)) +
                          " parameters, got " + std::to_string(params.size()));
  }
}

std::vector<std::vector<unsigned>> qcnn_active_qubits(unsigned num_qubits) {
  std::vector<std::vector<unsigned>> stages;
  std::vector<unsigned> active(num_qubits);
  for (unsigned q = 0; q < num_qubits; ++q) active[q] = q;
  stages.push_back(active);
  while (active.size() > 1) {
    std::vector<unsigned> kept;
    for (std::size_t i = 0; i + 1 < active.size(); i += 2) kept.push_back(active[i]);
    active = std::move(kept);
    stages.push_back(active);
  }
  return stages;
}

std::vector<quantum::Gate> qcnn_ansatz(const QcnnModel& model) {
  const auto stages = qcnn_active_qubits(model.num_qubits);
  std::vector<quantum::Gate> gates;
  std::size_t p = 0;
  for (std::size_t s = 0; s + 1 < stages.size(); ++s) {
    const auto& active = stages[s];
    for (std::size_t i = 0; i + 1 < active.size(); i += 2) {
      const unsigned kept = active[i];
      const unsigned dropped = active[i + 1];
      gates.push_back(quantum::Gate::ry(kept, model.params[p]));
      gates.push_back(quantum::Gate::ry(dropped, model.params[p + 1]));
      gates.push_back(quantum::Gate::cx(dropped, kept));
      gates.push_back(quantum::Gate::rz(kept, model.params[p + 2]));
      p += QcnnModel::kParamsPerBlock;
    }
  }
  return gates;
}

}  // namespace vqfl::models
