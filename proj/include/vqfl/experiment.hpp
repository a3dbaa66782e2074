// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vqfl/config/experiment_config.hpp"
#include "vqfl/fl/orchestrator.hpp"

namespace vqfl {

inline constexpr const char* kVersion = "0.1.0";

struct PreparedData {
  std::vector<fl::ClientState> clients;
  fl::ServerState server;
};

// Loads or generates the dataset, then balance -> PCA -> scaler ->
// partition into client shards (each split into train/test) and server
// validation/test holdouts. Expects a single-valued `devices`.
PreparedData prepare_data(const config::ExperimentConfig& cfg);

models::Model make_model(const config::ExperimentConfig& cfg);
fl::EngineConfig make_engine_config(const config::ExperimentConfig& cfg);

// prepare_data + run_federated for a single (non-sweep) config.
fl::ExperimentResult run_experiment(const config::ExperimentConfig& cfg);

// Stable sub-seed for a named purpose.
std::uint64_t derive_seed(std::uint64_t root, const std::string& purpose);

}  // namespace vqfl
