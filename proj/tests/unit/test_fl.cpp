// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "vqfl/config/experiment_config.hpp"
#include "vqfl/error.hpp"
#include "vqfl/experiment.hpp"
#include "vqfl/fl/aggregation.hpp"
#include "vqfl/fl/metrics_io.hpp"
#include "vqfl/fl/orchestrator.hpp"
#include "vqfl/fl/secure_channel.hpp"
#include "vqfl/qkd/codec.hpp"

namespace {

using namespace vqfl::fl;
using vqfl::ParamVector;

ParamVector brute_force_average(const std::vector<ParamVector>& ps,
                                const std::vector<std::size_t>& counts) {
  double total = 0;
  for (std::size_t c : counts) total += static_cast<double>(c);
  ParamVector out(ps.front().size(), 0.0);
  for (std::size_t j = 0; j < out.size(); ++j) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
      out[j] += static_cast<double>(counts[i]) * ps[i][j];
    }
    out[j] /= total;
  }
  return out;
}

vqfl::config::ExperimentConfig small_config() {
  vqfl::config::ExperimentConfig c;
  c.devices = {3};
  c.rounds = 2;
  c.optimizer.maxiter = 15;
  c.data.blobs.n_samples = 120;
  c.data.server_val_count = 20;
  c.data.server_test_count = 20;
  c.root_seed = 31;
  c.threads = 1;
  return c;
}

ExperimentResult run(const vqfl::config::ExperimentConfig& c) {
  return vqfl::run_experiment(c);
}

void expect_same_trajectory(const ExperimentResult& a, const ExperimentResult& b, double tol) {
  ASSERT_EQ(a.metrics.size(), b.metrics.size());
  for (std::size_t t = 0; t < a.metrics.size(); ++t) {
    const auto& x = a.metrics[t];
    const auto& y = b.metrics[t];
    EXPECT_NEAR(x.global_ft_val_acc, y.global_ft_val_acc, tol);
    EXPECT_NEAR(x.global_ft_test_acc, y.global_ft_test_acc, tol);
    EXPECT_NEAR(x.global_ft_val_loss, y.global_ft_val_loss, tol);
    EXPECT_NEAR(x.pred_test_acc, y.pred_test_acc, tol);
    EXPECT_NEAR(x.pred_val_acc, y.pred_val_acc, tol);
    EXPECT_NEAR(x.pred_val_loss, y.pred_val_loss, tol);
    EXPECT_NEAR(x.avg_local_train_acc, y.avg_local_train_acc, tol);
    EXPECT_NEAR(x.avg_local_test_acc, y.avg_local_test_acc, tol);
    EXPECT_NEAR(x.avg_local_train_loss, y.avg_local_train_loss, tol);
    ASSERT_EQ(a.traces[t].broadcast.size(), b.traces[t].broadcast.size());
    for (std::size_t j = 0; j < a.traces[t].broadcast.size(); ++j) {
      EXPECT_NEAR(a.traces[t].broadcast[j], b.traces[t].broadcast[j], tol);
    }
  }
}

TEST(WeightedAverage, IdenticalVectors) {
  const ParamVector v{0.1, -2.0, 3.5};
  const std::vector<ParamVector> ps(4, v);
  const std::vector<std::size_t> counts{3, 1, 7, 2};
  const auto out = weighted_average(ps, counts);
  for (std::size_t j = 0; j < v.size(); ++j) EXPECT_NEAR(out[j], v[j], 1e-15);
}

TEST(WeightedAverage, HandExample) {
  const std::vector<ParamVector> ps{{0.0}, {4.0}};
  const std::vector<std::size_t> counts{1, 3};
  EXPECT_DOUBLE_EQ(weighted_average(ps, counts)[0], 3.0);
}

TEST(WeightedAverage, MatchesBruteForceOracle) {
  vqfl::Rng rng(1);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t k = 1 + rng.below(8);
    const std::size_t dim = 1 + rng.below(16);
    std::vector<ParamVector> ps(k, ParamVector(dim));
    std::vector<std::size_t> counts(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (double& x : ps[i]) x = rng.uniform(-4, 4);
      counts[i] = 1 + rng.below(500);
    }
    const auto got = weighted_average(ps, counts);
    const auto want = brute_force_average(ps, counts);
    for (std::size_t j = 0; j < dim; ++j) ASSERT_NEAR(got[j], want[j], 1e-12);
  }
}

TEST(WeightedAverage, Errors) {
  const std::vector<ParamVector> ps{{1.0}, {1.0, 2.0}};
  EXPECT_THROW(weighted_average(ps, std::vector<std::size_t>{1, 1}), vqfl::InvalidArgument);
  EXPECT_THROW(weighted_average(std::vector<ParamVector>{}, std::vector<std::size_t>{}),
               vqfl::InvalidArgument);
  const std::vector<ParamVector> one{{1.0}};
  EXPECT_THROW(weighted_average(one, std::vector<std::size_t>{0}), vqfl::InvalidArgument);
  EXPECT_THROW(weighted_average(one, std::vector<std::size_t>{1, 2}), vqfl::InvalidArgument);
}

TEST(NormalizedWeights, SumToOne) {
  vqfl::Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::size_t> counts(1 + rng.below(20));
    for (auto& c : counts) c = 1 + rng.below(1000);
    double sum = 0;
    for (double w : normalized_weights(counts)) sum += w;
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(SecureLink, PlainPayloadIsSerializedParams) {
  const ParamVector p{0.25, 1.5, -0.125};
  vqfl::Rng rng(0);
  LinkConfig link;
  const auto tx = secure_uplink(p, nullptr, link, rng);
  EXPECT_EQ(tx.payload, vqfl::qkd::serialize_params(p, 12));
  EXPECT_EQ(tx.recovered, p);
  EXPECT_EQ(tx.attempts, 0);
}

TEST(SecureLink, QkdRecoversWithinQuantizationBound) {
  vqfl::Rng gen(3);
  ParamVector p(12);
  for (double& x : p) x = gen.uniform(-std::numbers::pi, std::numbers::pi);
  LinkConfig link;
  link.qkd.enabled = true;
  for (auto cipher : {vqfl::qkd::CipherKind::Shift256, vqfl::qkd::CipherKind::Xor}) {
    link.qkd.cipher = cipher;
    vqfl::Rng rng(4);
    const auto tx = secure_uplink(p, nullptr, link, rng);
    EXPECT_EQ(tx.attempts, 1);
    EXPECT_GT(tx.qubits, 0u);
    EXPECT_NE(tx.payload, vqfl::qkd::serialize_params(p, 12));
    for (std::size_t j = 0; j < p.size(); ++j) EXPECT_LE(std::abs(tx.recovered[j] - p[j]), 5e-13);
  }
}

TEST(SecureLink, QkdIsTransparentToRecoveredValues) {
  const ParamVector p{0.123456789, 2.718281828, 1.0 / 3.0};
  LinkConfig plain;
  LinkConfig secured;
  secured.qkd.enabled = true;
  vqfl::Rng a(5), b(5);
  EXPECT_EQ(secure_uplink(p, nullptr, plain, a).recovered,
            secure_uplink(p, nullptr, secured, b).recovered);
}

TEST(SecureLink, ZeroSensitivityDpMatchesDpOff) {
  const ParamVector p{0.3, 0.7};
  vqfl::privacy::DpConfig dp;
  dp.sensitivity = 0.0;
  dp.clip_nonnegative = false;
  LinkConfig link;
  vqfl::Rng a(6), b(6);
  EXPECT_EQ(secure_uplink(p, &dp, link, a).recovered, secure_uplink(p, nullptr, link, b).recovered);
}

TEST(SecureLink, DpNoiseChangesUpload) {
  const ParamVector p{0.3, 0.7, 1.1};
  vqfl::privacy::DpConfig dp;
  dp.epsilon = 1.0;
  dp.sensitivity = 0.5;
  LinkConfig link;
  vqfl::Rng rng(7);
  const auto tx = secure_uplink(p, &dp, link, rng);
  EXPECT_NE(tx.recovered, p);
  for (double x : tx.recovered) EXPECT_GE(x, 0.0);
}

TEST(SecureLink, EavesdropperExhaustsRetries) {
  LinkConfig link;
  link.qkd.enabled = true;
  link.qkd.eve.kind = vqfl::qkd::EveKind::Swap;
  vqfl::Rng rng(8);
  EXPECT_THROW(secure_uplink(ParamVector{0.5, 0.5}, nullptr, link, rng), vqfl::RuntimeAbort);
}

TEST(SecureLink, HalfSwapEventuallyGetsThroughOrAborts) {
  LinkConfig link;
  link.qkd.enabled = true;
  link.qkd.eve.kind = vqfl::qkd::EveKind::HalfSwap;
  int ok = 0, aborted = 0;
  for (std::uint64_t s = 0; s < 40; ++s) {
    vqfl::Rng rng(s);
    try {
      const auto tx = secure_uplink(ParamVector{0.5, 1.5}, nullptr, link, rng);
      EXPECT_EQ(tx.recovered, (ParamVector{0.5, 1.5}));
      EXPECT_GE(tx.attempts, 1);
      ++ok;
    } catch (const vqfl::RuntimeAbort&) {
      ++aborted;
    }
  }
  EXPECT_GT(ok, 30);
}

TEST(LocalRound, ZeroIterationsReturnsIncoming) {
  const auto cfg = small_config();
  auto prepared = vqfl::prepare_data(cfg);
  const auto model = vqfl::make_model(cfg);
  vqfl::optim::OptimizerConfig opt;
  opt.maxiter = 0;
  const ParamVector incoming{0.1, 0.2, 0.3, 0.4};
  const auto r = local_round(prepared.clients[0], model, incoming, opt);
  EXPECT_EQ(r.params, incoming);
  EXPECT_GE(r.metrics.train_acc, 0.0);
  EXPECT_LE(r.metrics.train_acc, 1.0);
}

TEST(LocalRound, IdenticalClientsIdenticalResults) {
  const auto cfg = small_config();
  auto prepared = vqfl::prepare_data(cfg);
  ClientState a = prepared.clients[0];
  ClientState b = prepared.clients[0];
  b.id = 99;
  const auto model = vqfl::make_model(cfg);
  const ParamVector incoming{0.4, 1.2, 0.3, 2.0};
  EXPECT_EQ(local_round(a, model, incoming, cfg.optimizer).params,
            local_round(b, model, incoming, cfg.optimizer).params);
}

TEST(FineTune, ZeroIterationsBroadcastsGlobal) {
  const auto cfg = small_config();
  const auto prepared = vqfl::prepare_data(cfg);
  const auto model = vqfl::make_model(cfg);
  vqfl::optim::OptimizerConfig opt;
  opt.maxiter = 0;
  const ParamVector global{0.9, 0.1, 1.7, 0.2};
  for (FtMode m : {FtMode::NoFt, FtMode::Ft, FtMode::FtAvg}) {
    const auto r = server_fine_tune(global, model, prepared.server, m, opt);
    EXPECT_EQ(r.broadcast, global);
    EXPECT_EQ(r.prediction, global);
  }
}

TEST(FineTune, FtAvgIsMidpointOfFtAndGlobal) {
  const auto cfg = small_config();
  const auto prepared = vqfl::prepare_data(cfg);
  const auto model = vqfl::make_model(cfg);
  const ParamVector global{0.9, 0.1, 1.7, 0.2};
  const auto ft = server_fine_tune(global, model, prepared.server, FtMode::Ft, cfg.optimizer);
  const auto avg = server_fine_tune(global, model, prepared.server, FtMode::FtAvg, cfg.optimizer);
  const auto noft = server_fine_tune(global, model, prepared.server, FtMode::NoFt, cfg.optimizer);
  EXPECT_EQ(noft.broadcast, global);
  EXPECT_EQ(ft.broadcast, ft.optimized);
  for (std::size_t j = 0; j < global.size(); ++j) {
    EXPECT_NEAR(avg.broadcast[j], 0.5 * (ft.broadcast[j] + global[j]), 1e-12);
  }
}

TEST(Evaluate, OneCorrectSampleAndAllWrong) {
  const vqfl::models::Model model = vqfl::models::VqcModel::make(1, 1, 2);
  vqfl::models::LabeledDataset one(1);
  one.push_back(std::vector<double>{0.0}, 0);
  EXPECT_DOUBLE_EQ(evaluate(ParamVector{0.0, 0.0}, model, one).accuracy, 1.0);
  vqfl::models::LabeledDataset wrong(1);
  for (double x : {0.1, 0.2, 0.3}) wrong.push_back(std::vector<double>{x}, 1);
  EXPECT_DOUBLE_EQ(evaluate(ParamVector{0.0, 0.0}, model, wrong).accuracy, 0.0);
}

TEST(Engine, ZeroRoundsGivesNoMetrics) {
  const auto cfg = small_config();
  auto prepared = vqfl::prepare_data(cfg);
  auto engine = vqfl::make_engine_config(cfg);
  engine.rounds = 0;
  const auto r = run_federated(engine, prepared.clients, prepared.server);
  EXPECT_TRUE(r.metrics.empty());
}

TEST(Engine, SingleClientAggregateEqualsUpload) {
  auto cfg = small_config();
  cfg.devices = {1};
  const auto r = run(cfg);
  for (const auto& t : r.traces) {
    ASSERT_EQ(t.uploads.size(), 1u);
    for (std::size_t j = 0; j < t.aggregated.size(); ++j) {
      EXPECT_NEAR(t.aggregated[j], t.uploads[0][j], 1e-15);
    }
  }
}

TEST(Engine, ReplayIsIdentical) {
  const auto cfg = small_config();
  const auto a = run(cfg);
  const auto b = run(cfg);
  expect_same_trajectory(a, b, 0.0);
  for (std::size_t t = 0; t < a.traces.size(); ++t) EXPECT_EQ(a.traces[t].uploads, b.traces[t].uploads);
}

TEST(Engine, ParallelMatchesSerial) {
  auto cfg = small_config();
  cfg.devices = {5};
  cfg.security.dp_enabled = true;
  cfg.security.qkd_enabled = true;
  cfg.security.sensitivity = 0.05;
  const auto serial = run(cfg);
  cfg.threads = 4;
  const auto parallel = run(cfg);
  for (std::size_t t = 0; t < serial.traces.size(); ++t) {
    EXPECT_EQ(serial.traces[t].uploads, parallel.traces[t].uploads);
    EXPECT_EQ(serial.traces[t].broadcast, parallel.traces[t].broadcast);
  }
}

TEST(Engine, QkdIsTransparent) {
  auto cfg = small_config();
  cfg.rounds = 3;
  const auto plain = run(cfg);
  cfg.security.qkd_enabled = true;
  const auto secured = run(cfg);
  expect_same_trajectory(plain, secured, 5e-13);
}

TEST(Engine, HugeEpsilonMatchesDpOff) {
  auto cfg = small_config();
  const auto off = run(cfg);
  cfg.security.dp_enabled = true;
  cfg.security.epsilon = 1e9;
  cfg.security.sensitivity = 1.0;
  cfg.security.clip_nonnegative = false;
  const auto on = run(cfg);
  ASSERT_EQ(off.traces.size(), on.traces.size());
  for (std::size_t t = 0; t < off.traces.size(); ++t) {
    for (std::size_t k = 0; k < off.traces[t].uploads.size(); ++k) {
      for (std::size_t j = 0; j < off.traces[t].uploads[k].size(); ++j) {
        EXPECT_NEAR(off.traces[t].uploads[k][j], on.traces[t].uploads[k][j], 1e-6);
      }
    }
    for (std::size_t j = 0; j < off.traces[t].broadcast.size(); ++j) {
      EXPECT_NEAR(off.traces[t].broadcast[j], on.traces[t].broadcast[j], 1e-6);
    }
  }
}

TEST(Engine, DroppedClientRenormalizes) {
  const auto cfg = small_config();
  auto prepared = vqfl::prepare_data(cfg);
  // An out-of-range label makes this client's training fail every round.
  auto& bad = prepared.clients[1].train_set;
  vqfl::models::LabeledDataset broken(bad.num_features());
  for (std::size_t i = 0; i < bad.size(); ++i) broken.push_back(bad.row(i), 7);
  bad = broken;
  const auto r = run_federated(vqfl::make_engine_config(cfg), prepared.clients, prepared.server);
  for (const auto& t : r.traces) {
    EXPECT_EQ(t.survivors, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(t.drop_reasons.size(), 1u);
    const std::vector<std::size_t> counts{prepared.clients[0].train_set.size(),
                                          prepared.clients[2].train_set.size()};
    double sum = 0;
    for (double w : normalized_weights(counts)) sum += w;
    EXPECT_NEAR(sum, 1.0, 1e-12);
    const auto want = brute_force_average(t.uploads, counts);
    for (std::size_t j = 0; j < want.size(); ++j) EXPECT_NEAR(t.aggregated[j], want[j], 1e-12);
  }
}

TEST(Engine, AllClientsDroppedAborts) {
  auto cfg = small_config();
  auto prepared = vqfl::prepare_data(cfg);
  auto engine = vqfl::make_engine_config(cfg);
  engine.security.qkd_enabled = true;
  engine.link.qkd.eve.kind = vqfl::qkd::EveKind::Swap;
  EXPECT_THROW(run_federated(engine, prepared.clients, prepared.server), vqfl::RuntimeAbort);
}

TEST(Engine, FtModesAgreeWithoutFineTuning) {
  auto cfg = small_config();
  cfg.server_optimizer = vqfl::optim::OptimizerConfig{};
  cfg.server_optimizer->maxiter = 0;
  std::vector<ExperimentResult> results;
  for (FtMode m : {FtMode::NoFt, FtMode::Ft, FtMode::FtAvg}) {
    cfg.ft_mode = m;
    results.push_back(run(cfg));
  }
  for (std::size_t t = 0; t < results[0].traces.size(); ++t) {
    EXPECT_EQ(results[0].traces[t].broadcast, results[1].traces[t].broadcast);
    EXPECT_EQ(results[0].traces[t].broadcast, results[2].traces[t].broadcast);
  }
}

TEST(Engine, RejectsEmptyInputs) {
  const auto cfg = small_config();
  auto prepared = vqfl::prepare_data(cfg);
  const auto engine = vqfl::make_engine_config(cfg);
  EXPECT_THROW(run_federated(engine, {}, prepared.server), vqfl::ConfigError);
  ServerState empty_server;
  EXPECT_THROW(run_federated(engine, prepared.clients, empty_server), vqfl::ConfigError);
}

TEST(Metrics, CsvFormat) {
  RoundMetrics m;
  m.round = 1;
  m.pred_test_acc = 0.5;
  m.comm_time_s = 0.0123456789;
  const std::vector<RoundMetrics> rows{m};
  const std::string csv = format_metrics_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kMetricsHeader);
  EXPECT_NE(csv.find("1,0.000000,0.000000,0.000000,0.500000,"), std::string::npos);
  EXPECT_NE(csv.find(",0.012346\n"), std::string::npos);
}

TEST(SecurityModeLabel, Names) {
  EXPECT_EQ((SecurityMode{false, false}.label()), "QFL");
  EXPECT_EQ((SecurityMode{true, false}.label()), "QFL-DP");
  EXPECT_EQ((SecurityMode{false, true}.label()), "QFL-QKD");
  EXPECT_EQ((SecurityMode{true, true}.label()), "QFL-DP-QKD");
}

}  // namespace
