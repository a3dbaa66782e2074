// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <variant>
#include <vector>

#include "vqfl/models/dataset.hpp"
#include "vqfl/models/qcnn.hpp"
#include "vqfl/models/vqc.hpp"
#include "vqfl/optim/optimizer.hpp"
#include "vqfl/quantum/state.hpp"

namespace vqfl::models {

// Closed set of classifier architectures. New architectures slot in as
// another alternative plus an overload of the few dispatch points in
// model.cpp.
using Model = std::variant<VqcModel, QcnnModel>;

unsigned num_qubits(const Model& model);
unsigned num_classes(const Model& model);
const ParamVector& params(const Model& model);
// Copy of `model` carrying `p`; throws on a length mismatch.
Model with_params(const Model& model, ParamVector p);
void validate(const Model& model);

// Encoding + ansatz for one input.
quantum::CircuitSpec build_circuit(const Model& model, std::span<const double> x);
quantum::QuantumState final_state(const Model& model, std::span<const double> x);

// Probability simplex point of length num_classes(model).
std::vector<double> class_probabilities(const Model& model, std::span<const double> x);

// argmax of class_probabilities, ties broken toward the lower id.
int predict(const Model& model, std::span<const double> x);
int argmax_class(std::span<const double> probs);

inline constexpr double kLogFloor = 1e-12;

// Mean of -log(P(true class) + 1e-12). Throws on an empty dataset.
double cross_entropy_loss(const Model& model, const LabeledDataset& data);
double accuracy(const Model& model, const LabeledDataset& data);

struct AccuracyLoss {
  double accuracy = 0.0;
  double loss = 0.0;
};
// One pass computing both (shares the circuit runs).
AccuracyLoss score(const Model& model, const LabeledDataset& data);

struct TrainResult {
  Model model;
  optim::ObjectiveTrace trace;
};

// Minimises the cross-entropy over the model parameters, starting from the
// model's current parameters.
TrainResult train(const Model& model, const LabeledDataset& data,
                  const optim::OptimizerConfig& opt);

}  // namespace vqfl::models
