// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vqfl/fl/secure_channel.hpp"
#include "vqfl/models/model.hpp"
#include "vqfl/optim/optimizer.hpp"
#include "vqfl/privacy/dp.hpp"

namespace vqfl::fl {

enum class FtMode { NoFt, Ft, FtAvg };

std::string to_string(FtMode mode);
FtMode ft_mode_from_string(const std::string& name);

struct SecurityMode {
  bool dp_enabled = false;
  bool qkd_enabled = false;

  // QFL, QFL-DP, QFL-QKD or QFL-DP-QKD.
  std::string label() const;
};

struct ClientState {
  std::size_t id = 0;
  models::LabeledDataset train_set;
  models::LabeledDataset test_set;
  ParamVector params;
};

struct ServerState {
  ParamVector global;
  models::LabeledDataset validation_set;
  models::LabeledDataset test_set;
};

struct RoundMetrics {
  int round = 0;
  double global_ft_val_acc = 0.0;
  double global_ft_test_acc = 0.0;
  double global_ft_val_loss = 0.0;
  double pred_test_acc = 0.0;
  double pred_val_acc = 0.0;
  double pred_val_loss = 0.0;
  double avg_local_train_acc = 0.0;
  double avg_local_test_acc = 0.0;
  double avg_local_train_loss = 0.0;
  double avg_local_train_time_s = 0.0;
  double comm_time_s = 0.0;
};

// Parameter snapshots for one round, kept for analysis and tests.
struct RoundTrace {
  std::vector<ParamVector> uploads;          // server-side recovered, per surviving client
  std::vector<std::size_t> survivors;        // client ids that made it into the average
  std::vector<std::string> drop_reasons;     // one entry per dropped client
  ParamVector aggregated;                    // untouched weighted average
  ParamVector optimized;                     // server fine-tuned copy
  ParamVector broadcast;
  ParamVector prediction;
};

struct LocalMetrics {
  double train_acc = 0.0;
  double train_loss = 0.0;
  double test_acc = 0.0;
  double train_time_s = 0.0;
};

struct LocalRoundResult {
  ParamVector params;
  LocalMetrics metrics;
};

// Adopts `incoming`, trains on the client's train set and reports metrics.
// Optimizer errors propagate; the engine treats them as a dropped client.
LocalRoundResult local_round(ClientState& client, const models::Model& model_template,
                             std::span<const double> incoming,
                             const optim::OptimizerConfig& opt);

models::AccuracyLoss evaluate(std::span<const double> params,
                              const models::Model& model_template,
                              const models::LabeledDataset& data);

struct FtResult {
  ParamVector broadcast;
  ParamVector prediction;
  ParamVector optimized;
  double val_acc = 0.0;
  double val_loss = 0.0;
  double test_acc = 0.0;
  bool fell_back = false;
};

// Fine-tunes a copy of `global` on the server validation set.
//  NoFt:  broadcast = prediction = global (the tuned copy only feeds metrics)
//  Ft:    broadcast = prediction = tuned copy
//  FtAvg: broadcast = prediction = midpoint(tuned copy, global)
// If the optimizer throws, the result falls back to NoFt and fell_back is set.
FtResult server_fine_tune(std::span<const double> global, const models::Model& model_template,
                          const ServerState& server, FtMode mode,
                          const optim::OptimizerConfig& opt);

struct EngineConfig {
  models::Model model;  // architecture; its params are ignored
  int rounds = 1;
  optim::OptimizerConfig local_opt;
  std::optional<optim::OptimizerConfig> server_opt;
  SecurityMode security;
  privacy::DpConfig dp;
  LinkConfig link;
  FtMode ft_mode = FtMode::NoFt;
  std::uint64_t root_seed = 0;
  // Worker threads for local training; 0 picks hardware concurrency, 1 runs
  // every client on the calling thread.
  unsigned threads = 0;
};

struct ExperimentResult {
  std::vector<RoundMetrics> metrics;
  std::vector<RoundTrace> traces;
};

// Deterministic initial global parameters for a root seed: uniform in [0, pi).
ParamVector initial_params(const models::Model& model, std::uint64_t root_seed);

// Runs cfg.rounds rounds of broadcast -> local training -> DP -> uplink ->
// weighted average -> server fine-tuning -> evaluation. Clients whose link or
// training fails are dropped for that round and the average is renormalised
// over the survivors; a round in which every client drops throws
// RuntimeAbort. `server.global` is overwritten with initial_params.
ExperimentResult run_federated(const EngineConfig& cfg, std::vector<ClientState> clients,
                               ServerState server);

}  // namespace vqfl::fl
