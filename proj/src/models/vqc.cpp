// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/models/vqc.hpp"

#include <string>

#include "vqfl/error.hpp"
#include "vqfl/quantum/state.hpp"

namespace vqfl::models {

VqcModel VqcModel::make(unsigned num_qubits, unsigned num_layers, unsigned num_classes) {
  VqcModel m{num_qubits, num_layers, num_classes,
             ParamVector(param_count(num_qubits, num_layers), 0.0)};
  m.validate();
  return m;
}

void VqcModel::validate() const {
  if (num_qubits == 0 || num_qubits > quantum::kMaxQubits) {
    throw InvalidArgument("num_qubits must be in [1, " + std::to_string(quantum::kMaxQubits) + "]");
  }
  if (num_layers < 1) throw InvalidArgument("num_layers must be >= 1");
  if (num_classes < 2) throw InvalidArgument("num_classes must be >= 2");
  if (num_classes > (std::size_t{1} << num_qubits)) {
    throw InvalidArgument("num_classes " + std::to_string(num_classes) + " exceeds 2^num_qubits");
  }
  if (params.size() != param_count(num_qubits, num_layers)) {
    throw InvalidArgument("VQC expects " + std::to_string(param_count(num_qubits, num_layers)) +
                          " parameters, got " + std::to_string(params.size()));
  }
}

std::vector<quantum::Gate> encode_features(std::span<const double> x, unsigned num_qubits) {
  if (x.size() != num_qubits) {
    throw InvalidArgument("feature vector has " + std::to_string(x.size()) +
                          " entries for " + std::to_string(num_qubits) + " qubits");
  }
  std::vector<quantum::Gate> gates;
  gates.reserve(num_qubits);
  for (unsigned q = 0; q < num_qubits; ++q) gates.push_back(quantum::Gate::ry(q, x[q]));
  return gates;
}

std::vector<quantum::Gate> vqc_ansatz(const VqcModel& model) {
  const unsigned n = model.num_qubits;
  std::vector<quantum::Gate> gates;
  gates.reserve(model.params.size() + std::size_t{model.num_layers} * n);
  std::size_t p = 0;
  for (unsigned layer = 0; layer < model.num_layers; ++layer) {
    for (unsigned q = 0; q < n; ++q) gates.push_back(quantum::Gate::ry(q, model.params[p++]));
    if (n > 1) {
      for (unsigned q = 0; q < n; ++q) gates.push_back(quantum::Gate::cx(q, (q + 1) % n));
    }
  }
  for (unsigned q = 0; q < n; ++q) gates.push_back(quantum::Gate::ry(q, model.params[p++]));
  return gates;
}

}  // namespace vqfl::models
