// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/models/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vqfl/error.hpp"

namespace vqfl::models {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_dataset(const Model& model, const LabeledDataset& data) {
  if (data.empty()) throw InvalidArgument("dataset is empty");
  if (data.num_features() != num_qubits(model)) {
    throw InvalidArgument("dataset has " + std::to_string(data.num_features()) +
                          " features for a " + std::to_string(num_qubits(model)) +
                          "-qubit model");
  }
  data.check_labels(static_cast<int>(num_classes(model)));
}

}  // namespace

unsigned num_qubits(const Model& model) {
  return std::visit([](const auto& m) { return m.num_qubits; }, model);
}

unsigned num_classes(const Model& model) {
  return std::visit(Overloaded{
                        [](const VqcModel& m) { return m.num_classes; },
                        [](const QcnnModel&) { return QcnnModel::kNumClasses; },
                    },
                    model);
}

const ParamVector& params(const Model& model) {
  return std::visit([](const auto& m) -> const ParamVector& { return m.params; }, model);
}

Model with_params(const Model& model, ParamVector p) {
  Model out = model;
  std::visit(
      [&](auto& m) {
        if (p.size() != m.params.size()) {
          throw InvalidArgument("parameter vector has " + std::to_string(p.size()) +
                                " entries, model expects " + std::to_string(m.params.size()));
        }
        m.params = std::move(p);
      },
      out);
  return out;
}

void validate(const Model& model) {
  std::visit([](const auto& m) { m.validate(); }, model);
}

quantum::CircuitSpec build_circuit(const Model& model, std::span<const double> x) {
  const unsigned n = num_qubits(model);
  quantum::CircuitSpec circuit{n, encode_features(x, n)};
  const auto ansatz = std::visit(Overloaded{
                                     [](const VqcModel& m) { return vqc_ansatz(m); },
                                     [](const QcnnModel& m) { return qcnn_ansatz(m); },
                                 },
                                 model);
  circuit.gates.insert(circuit.gates.end(), ansatz.begin(), ansatz.end());
  return circuit;
}

quantum::QuantumState final_state(const Model& model, std::span<const double> x) {
  const quantum::CircuitSpec circuit = build_circuit(model, x);
  return quantum::run_circuit(circuit, quantum::QuantumState(circuit.num_qubits));
}

std::vector<double> class_probabilities(const Model& model, std::span<const double> x) {
  const quantum::QuantumState state = final_state(model, x);
  return std::visit(
      Overloaded{
          [&](const VqcModel& m) {
            const std::vector<double> probs = quantum::probabilities(state);
            std::vector<double> out(m.num_classes, 0.0);
            for (std::size_t b = 0; b < probs.size(); ++b) out[b % m.num_classes] += probs[b];
            return out;
          },
          [&](const QcnnModel&) {
            const double z = std::clamp(quantum::expectation_z(state, 0), -1.0, 1.0);
            return std::vector<double>{(1.0 + z) / 2.0, (1.0 - z) / 2.0};
          },
      },
      model);
}

int argmax_class(std::span<const double> probs) {
  int best = 0;
  for (std::size_t c = 1; c < probs.size(); ++c) {
    if (probs[c] > probs[static_cast<std::size_t>(best)]) best = static_cast<int>(c);
  }
  return best;
}

int predict(const Model& model, std::span<const double> x) {
  return argmax_class(class_probabilities(model, x));
}

AccuracyLoss score(const Model& model, const LabeledDataset& data) {
  check_dataset(model, data);
  std::size_t correct = 0;
  double loss = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::vector<double> probs = class_probabilities(model, data.row(i));
    const int y = data.label(i);
    if (argmax_class(probs) == y) ++correct;
    loss -= std::log(std::max(probs[static_cast<std::size_t>(y)], kLogFloor));
  }
  const auto n = static_cast<double>(data.size());
  return {static_cast<double>(correct) / n, loss / n};
}

double cross_entropy_loss(const Model& model, const LabeledDataset& data) {
  return score(model, data).loss;
}

double accuracy(const Model& model, const LabeledDataset& data) {
  return score(model, data).accuracy;
}

TrainResult train(const Model& model, const LabeledDataset& data,
                  const optim::OptimizerConfig& opt) {
  validate(model);
  check_dataset(model, data);
  const optim::Objective objective = [&](std::span<const double> theta) {
    return cross_entropy_loss(with_params(model, ParamVector(theta.begin(), theta.end())), data);
  };
  optim::MinimizeResult result = optim::minimize(objective, params(model), opt);
  return {with_params(model, std::move(result.params)), std::move(result.trace)};
}

}  // namespace vqfl::models
