// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/fl/orchestrator.hpp"

#include <atomic>
#include <chrono>
#include <iostream>
#include <numbers>
#include <thread>

#include "vqfl/error.hpp"
#include "vqfl/fl/aggregation.hpp"

namespace vqfl::fl {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs task(i) for i in [0, count) on up to `threads` workers. Each task
// writes only its own slot, so the outcome does not depend on scheduling.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const auto workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
}

struct ClientOutcome {
  bool ok = false;
  std::string failure;
  LocalRoundResult local;
  ParamVector uploaded;
  bool trained = false;
};

}  // namespace

std::string to_string(FtMode mode) {
  switch (mode) {
    case FtMode::NoFt: return "noft";
    case FtMode::Ft: return "ft";
    case FtMode::FtAvg: return "ftavg";
  }
  return "?";
}

FtMode ft_mode_from_string(const std::string& name) {
  if (name == "noft") return FtMode::NoFt;
  if (name == "ft") return FtMode::Ft;
  if (name == "ftavg") return FtMode::FtAvg;
  throw ConfigError("ft_mode", "expected noft|ft|ftavg, got '" + name + "'");
}

std::string SecurityMode::label() const {
  std::string s = "QFL";
  if (dp_enabled) s += "-DP";
  if (qkd_enabled) s += "-QKD";
  return s;
}

models::AccuracyLoss evaluate(std::span<const double> params,
                              const models::Model& model_template,
                              const models::LabeledDataset& data) {
  const models::Model m =
      models::with_params(model_template, ParamVector(params.begin(), params.end()));
  return models::score(m, data);
}

LocalRoundResult local_round(ClientState& client, const models::Model& model_template,
                             std::span<const double> incoming,
                             const optim::OptimizerConfig& opt) {
  client.params.assign(incoming.begin(), incoming.end());
  const auto start = Clock::now();
  const models::TrainResult trained =
      models::train(models::with_params(model_template, client.params), client.train_set, opt);
  LocalRoundResult out;
  out.metrics.train_time_s = seconds_since(start);
  out.params = models::params(trained.model);
  client.params = out.params;

  const models::AccuracyLoss train_score = models::score(trained.model, client.train_set);
  out.metrics.train_acc = train_score.accuracy;
  out.metrics.train_loss = train_score.loss;
  out.metrics.test_acc =
      client.test_set.empty() ? 0.0 : models::score(trained.model, client.test_set).accuracy;
  return out;
}

FtResult server_fine_tune(std::span<const double> global, const models::Model& model_template,
                          const ServerState& server, FtMode mode,
                          const optim::OptimizerConfig& opt) {
  const ParamVector untouched(global.begin(), global.end());
  FtResult out;
  try {
    const models::TrainResult tuned = models::train(
        models::with_params(model_template, untouched), server.validation_set, opt);
    out.optimized = models::params(tuned.model);
  } catch (const std::exception& e) {
    std::cerr << "warning: server fine-tuning failed (" << e.what()
              << "); falling back to noft\n";
    out.optimized = untouched;
    out.fell_back = true;
    mode = FtMode::NoFt;
  }

  const models::AccuracyLoss val = evaluate(out.optimized, model_template, server.validation_set);
  out.val_acc = val.accuracy;
  out.val_loss = val.loss;
  out.test_acc = evaluate(out.optimized, model_template, server.test_set).accuracy;

  switch (mode) {
    case FtMode::NoFt: out.broadcast = untouched; break;
    case FtMode::Ft: out.broadcast = out.optimized; break;
    case FtMode::FtAvg: out.broadcast = midpoint(out.optimized, untouched); break;
  }
  out.prediction = out.broadcast;
  return out;
}

ParamVector initial_params(const models::Model& model, std::uint64_t root_seed) {
  Rng rng = Rng(root_seed).split("initial-params");
  ParamVector p(models::params(model).size());
  for (double& v : p) v = rng.uniform(0.0, std::numbers::pi);
  return p;
}

ExperimentResult run_federated(const EngineConfig& cfg, std::vector<ClientState> clients,
                               ServerState server) {
  models::validate(cfg.model);
  cfg.local_opt.validate();
  if (cfg.server_opt) cfg.server_opt->validate();
  if (cfg.security.dp_enabled) cfg.dp.validate();
  if (cfg.rounds < 0) throw ConfigError("rounds", "must be >= 0");
  if (clients.empty()) throw ConfigError("devices", "at least one client is required");
  for (const ClientState& c : clients) {
    if (c.train_set.empty()) {
      throw ConfigError("devices", "client " + std::to_string(c.id) + " has no training data");
    }
  }
  if (server.validation_set.empty() || server.test_set.empty()) {
    throw ConfigError("data", "server validation and test sets must be non-empty");
  }

  LinkConfig link = cfg.link;
  link.qkd.enabled = cfg.security.qkd_enabled;
  const privacy::DpConfig* dp = cfg.security.dp_enabled ? &cfg.dp : nullptr;
  const optim::OptimizerConfig& server_opt = cfg.server_opt ? *cfg.server_opt : cfg.local_opt;

  const Rng root(cfg.root_seed);
  server.global = initial_params(cfg.model, cfg.root_seed);

  ExperimentResult result;
  for (int t = 1; t <= cfg.rounds; ++t) {
    const auto round_start = Clock::now();
    const Rng round_rng = root.split("round", static_cast<std::uint64_t>(t));
    std::vector<ClientOutcome> outcomes(clients.size());

    parallel_for(clients.size(), cfg.threads, [&](std::size_t k) {
      ClientOutcome& out = outcomes[k];
      const Rng client_rng = round_rng.split("client", clients[k].id);
      try {
        Rng down_rng = client_rng.split("downlink");
        const Transmission down = secure_downlink(server.global, link, down_rng);
        out.local = local_round(clients[k], cfg.model, down.recovered, cfg.local_opt);
        out.trained = true;
        Rng up_rng = client_rng.split("uplink");
        out.uploaded = secure_uplink(out.local.params, dp, link, up_rng).recovered;
        out.ok = true;
      } catch (const std::exception& e) {
        out.failure = "client " + std::to_string(clients[k].id) + ": " + e.what();
      }
    });

    RoundTrace trace;
    std::vector<std::size_t> counts;
    RoundMetrics m;
    m.round = t;
    std::size_t trained = 0;
    for (std::size_t k = 0; k < clients.size(); ++k) {
      const ClientOutcome& out = outcomes[k];
      if (out.trained) {
        ++trained;
        m.avg_local_train_acc += out.local.metrics.train_acc;
        m.avg_local_test_acc += out.local.metrics.test_acc;
        m.avg_local_train_loss += out.local.metrics.train_loss;
        m.avg_local_train_time_s += out.local.metrics.train_time_s;
      }
      if (out.ok) {
        trace.uploads.push_back(out.uploaded);
        trace.survivors.push_back(clients[k].id);
        counts.push_back(clients[k].train_set.size());
      } else {
        trace.drop_reasons.push_back(out.failure);
        std::cerr << "warning: round " << t << ": dropped " << out.failure << '\n';
      }
    }
    if (trace.uploads.empty()) {
      throw RuntimeAbort("round " + std::to_string(t) + ": every client dropped (" +
                         trace.drop_reasons.front() + ")");
    }
    if (trained > 0) {
      const auto n = static_cast<double>(trained);
      m.avg_local_train_acc /= n;
      m.avg_local_test_acc /= n;
      m.avg_local_train_loss /= n;
      m.avg_local_train_time_s /= n;
    }

    trace.aggregated = weighted_average(trace.uploads, counts);
    const FtResult ft =
        server_fine_tune(trace.aggregated, cfg.model, server, cfg.ft_mode, server_opt);
    trace.optimized = ft.optimized;
    trace.broadcast = ft.broadcast;
    trace.prediction = ft.prediction;
    m.global_ft_val_acc = ft.val_acc;
    m.global_ft_val_loss = ft.val_loss;
    m.global_ft_test_acc = ft.test_acc;

    const models::AccuracyLoss pred_val = evaluate(ft.prediction, cfg.model, server.validation_set);
    m.pred_val_acc = pred_val.accuracy;
    m.pred_val_loss = pred_val.loss;
    m.pred_test_acc = evaluate(ft.prediction, cfg.model, server.test_set).accuracy;

    server.global = ft.broadcast;
    m.comm_time_s = seconds_since(round_start);
    result.metrics.push_back(m);
    result.traces.push_back(std::move(trace));
  }
  return result;
}

}  // namespace vqfl::fl
