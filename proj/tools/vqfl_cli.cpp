// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

// vqfl command-line front end.
//
//   vqfl run <config.json> [--threads N] [--output PATH] [--root-seed S] [--rounds T]
//   vqfl qkd-demo [--n N] [--eve none|intercept|swap|halfswap] [--flip P] [--seed S] ...
//   vqfl dp-demo --epsilon E [--sensitivity D] [--mechanism laplace|gaussian] [--delta d] ...
//   vqfl gen-data [--samples N] [--features D] [--classes C] ... --out data.csv
//
// Relative output paths are placed under $VQFL_OUTPUT_DIR when it is set.
// Exit codes: 0 success, 2 invalid arguments or config, 3 runtime abort.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "vqfl/config/experiment_config.hpp"
#include "vqfl/data/blobs.hpp"
#include "vqfl/data/csv.hpp"
#include "vqfl/error.hpp"
#include "vqfl/experiment.hpp"
#include "vqfl/fl/metrics_io.hpp"
#include "vqfl/privacy/dp.hpp"
#include "vqfl/qkd/bb84.hpp"
#include "vqfl/simd/kernels.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitAbort = 3;

std::string resolve_output(const std::string& path) {
  const std::filesystem::path p(path);
  const char* dir = std::getenv("VQFL_OUTPUT_DIR");
  if (p.is_absolute() || dir == nullptr || *dir == '\0') return path;
  return (std::filesystem::path(dir) / p).string();
}

void ensure_parent(const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
}

struct RunArgs {
  std::string config_path;
  std::optional<unsigned> threads;
  std::optional<std::string> output;
  std::optional<std::uint64_t> root_seed;
  std::optional<int> rounds;
};

int cmd_run(const RunArgs& args) {
  vqfl::config::ExperimentConfig cfg = vqfl::config::load_config(args.config_path);
  if (args.threads) cfg.threads = *args.threads;
  if (args.output) cfg.output = *args.output;
  if (args.root_seed) cfg.root_seed = *args.root_seed;
  if (args.rounds) cfg.rounds = *args.rounds;
  cfg.validate();

  for (vqfl::config::ExperimentConfig one : vqfl::config::expand_sweep(cfg)) {
    one.output = resolve_output(one.output);
    const vqfl::fl::ExperimentResult result = vqfl::run_experiment(one);
    ensure_parent(one.output);
    vqfl::fl::write_metrics_csv(one.output, result.metrics);

    const nlohmann::json manifest = {
        {"artifact", "vqfl"},
        {"artifact_version", vqfl::kVersion},
        {"simd_kernels", std::string(vqfl::simd::active_kernels().name)},
        {"config", vqfl::config::to_json(one)},
    };
    std::ofstream(vqfl::config::manifest_path(one.output)) << manifest.dump(2) << '\n';

    const auto& last = result.metrics.back();
    std::printf("devices=%zu rounds=%d pred_test_acc=%.6f pred_val_acc=%.6f -> %s\n",
                one.devices.front(), one.rounds, last.pred_test_acc, last.pred_val_acc,
                one.output.c_str());
  }
  return kExitOk;
}

struct QkdArgs {
  std::size_t n = 1000;
  std::string eve = "none";
  double flip = 0.0;
  std::uint64_t seed = 0;
  double test_fraction = 0.1;
  std::size_t n_allowed = 0;
  std::string dump = "qkd_session.csv";
};

int cmd_qkd_demo(const QkdArgs& args) {
  if (args.n < 1) throw vqfl::ConfigError("n", "must be >= 1");
  vqfl::qkd::EveModel eve{vqfl::qkd::eve_from_string(args.eve), args.seed};
  vqfl::qkd::ChannelConfig channel{args.flip};
  channel.validate();
  if (!(args.test_fraction > 0.0 && args.test_fraction < 1.0)) {
    throw vqfl::ConfigError("test-fraction", "must lie in (0, 1)");
  }

  vqfl::Rng rng = vqfl::Rng(args.seed).split("qkd-demo");
  vqfl::Rng exchange_rng = rng.split("exchange");
  vqfl::Rng test_rng = rng.split("test");
  const auto session = vqfl::qkd::bb84_exchange(args.n, eve, channel, exchange_rng);
  const auto report = vqfl::qkd::run_test(session, args.test_fraction, args.n_allowed, test_rng);

  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < session.sender_key.size(); ++i) {
    disagreements += session.sender_key[i] != session.receiver_key[i];
  }
  const double sifted = static_cast<double>(session.sifted_indices.size());
  const double qber = sifted > 0 ? static_cast<double>(disagreements) / sifted : 0.0;

  const std::string dump = resolve_output(args.dump);
  ensure_parent(dump);
  std::ofstream out(dump, std::ios::binary);
  if (!out) throw vqfl::RuntimeAbort("cannot write session dump '" + dump + "'");
  out << vqfl::qkd::session_dump(session);

  std::printf("n %zu\n", session.n);
  std::printf("eve %s\n", vqfl::qkd::to_string(eve.kind).c_str());
  std::printf("sifted %zu\n", session.sifted_indices.size());
  std::printf("sift_fraction %.6f\n", sifted / static_cast<double>(session.n));
  std::printf("qber %.6f\n", qber);
  std::printf("test_bits %zu\n", report.tested_indices.size());
  std::printf("test_errors %zu\n", report.error_count);
  std::printf("test_qber %.6f\n", report.qber);
  std::printf("passed %s\n", report.passed ? "true" : "false");
  std::printf("key_bits %zu\n", report.sender_key.size());
  std::printf("dump %s\n", dump.c_str());
  return kExitOk;
}

struct DpArgs {
  double epsilon = 1.0;
  double sensitivity = 1.0;
  std::string mechanism = "laplace";
  std::optional<double> delta;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
};

int cmd_dp_demo(const DpArgs& args) {
  vqfl::privacy::DpConfig cfg;
  cfg.mechanism = vqfl::privacy::mechanism_from_string(args.mechanism);
  cfg.epsilon = args.epsilon;
  cfg.sensitivity = args.sensitivity;
  cfg.delta = args.delta;
  cfg.clip_nonnegative = false;
  const double scale = vqfl::privacy::noise_scale(cfg);

  vqfl::Rng rng = vqfl::Rng(args.seed).split("dp-demo");
  const vqfl::ParamVector zeros(args.samples, 0.0);
  const vqfl::ParamVector draws = vqfl::privacy::add_noise(zeros, cfg, rng);
  double mean = 0.0;
  for (double d : draws) mean += d;
  mean /= static_cast<double>(draws.size());
  double var = 0.0;
  for (double d : draws) var += (d - mean) * (d - mean);
  var /= static_cast<double>(draws.size() > 1 ? draws.size() - 1 : 1);
  const double expected =
      cfg.mechanism == vqfl::privacy::Mechanism::Laplace ? 2.0 * scale * scale : scale * scale;

  std::printf("mechanism %s\n", vqfl::privacy::to_string(cfg.mechanism).c_str());
  std::printf("scale %.6f\n", scale);
  std::printf("samples %zu\n", draws.size());
  std::printf("mean %.6f\n", mean);
  std::printf("variance %.6f\n", var);
  std::printf("expected_variance %.6f\n", expected);
  return kExitOk;
}

struct GenArgs {
  std::size_t samples = 300;
  std::size_t features = 2;
  int classes = 2;
  double separation = 3.0;
  std::vector<double> weights;
  double cluster_std = 1.0;
  std::uint64_t seed = 0;
  std::string out = "blobs.csv";
};

int cmd_gen_data(const GenArgs& args) {
  vqfl::data::BlobSpec spec{args.samples, args.features,   args.classes, args.separation,
                            args.weights, args.cluster_std, args.seed};
  const auto data = vqfl::data::generate_blobs(spec);
  const std::string path = resolve_output(args.out);
  ensure_parent(path);
  vqfl::data::write_csv(path, data);
  std::printf("wrote %zu rows x %zu features -> %s\n", data.size(), data.num_features(),
              path.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum federated learning simulator with DP and BB84-secured uplinks"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run an experiment (or device-count sweep) from a JSON config");
  run->add_option("config", run_args.config_path, "Experiment config file")->required();
  run->add_option("--threads", run_args.threads, "Client worker threads (0 = hardware)");
  run->add_option("--output", run_args.output, "Metrics CSV path");
  run->add_option("--root-seed", run_args.root_seed, "Root seed");
  run->add_option("--rounds", run_args.rounds, "Communication rounds");

  QkdArgs qkd_args;
  auto* qkd = app.add_subcommand("qkd-demo", "Run one BB84 exchange and eavesdropping test");
  qkd->add_option("--n", qkd_args.n, "Qubits to transmit");
  qkd->add_option("--eve", qkd_args.eve, "none|intercept|swap|halfswap");
  qkd->add_option("--flip", qkd_args.flip, "Channel bit-flip probability");
  qkd->add_option("--seed", qkd_args.seed, "Seed");
  qkd->add_option("--test-fraction", qkd_args.test_fraction, "Fraction of sifted bits disclosed");
  qkd->add_option("--n-allowed", qkd_args.n_allowed, "Tolerated test errors");
  qkd->add_option("--dump", qkd_args.dump, "Per-qubit session dump path");

  DpArgs dp_args;
  auto* dp = app.add_subcommand("dp-demo", "Print the DP noise scale and empirical noise statistics");
  dp->add_option("--epsilon", dp_args.epsilon, "Privacy budget");
  dp->add_option("--sensitivity", dp_args.sensitivity, "Sensitivity");
  dp->add_option("--mechanism", dp_args.mechanism, "laplace|gaussian");
  dp->add_option("--delta", dp_args.delta, "Delta (gaussian)");
  dp->add_option("--samples", dp_args.samples, "Noise draws");
  dp->add_option("--seed", dp_args.seed, "Seed");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen-data", "Write a synthetic Gaussian-blob dataset as CSV");
  gen->add_option("--samples", gen_args.samples, "Rows");
  gen->add_option("--features", gen_args.features, "Feature columns");
  gen->add_option("--classes", gen_args.classes, "Classes");
  gen->add_option("--separation", gen_args.separation, "Distance between neighbouring centres");
  gen->add_option("--weights", gen_args.weights, "Class proportions");
  gen->add_option("--std", gen_args.cluster_std, "Cluster standard deviation");
  gen->add_option("--seed", gen_args.seed, "Seed");
  gen->add_option("--out", gen_args.out, "Output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (run->parsed()) return cmd_run(run_args);
    if (qkd->parsed()) return cmd_qkd_demo(qkd_args);
    if (dp->parsed()) return cmd_dp_demo(dp_args);
    if (gen->parsed()) return cmd_gen_data(gen_args);
  } catch (const vqfl::ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const vqfl::InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const vqfl::RuntimeAbort& e) {
    std::cerr << "aborted: " << e.what() << '\n';
    return kExitAbort;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitAbort;
  }
  return kExitInvalid;
}
