// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "vqfl/data/scaler.hpp"
#include "vqfl/fl/orchestrator.hpp"
#include "vqfl/optim/optimizer.hpp"
#include "vqfl/privacy/dp.hpp"
#include "vqfl/qkd/cipher.hpp"

namespace vqfl::config {

enum class ModelKind { Vqc, Qcnn };
enum class DataSource { Blobs, Csv };
enum class ScalerChoice { None, Standard, MinMax };

struct BlobParams {
  std::size_t n_samples = 300;
  std::size_t n_features = 2;
  double class_separation = 3.0;
  std::vector<double> class_weights;  // empty = uniform
  double cluster_std = 1.0;

  bool operator==(const BlobParams&) const = default;
};

struct DataConfig {
  DataSource source = DataSource::Blobs;
  BlobParams blobs;
  std::string csv_path;
  ScalerChoice scaler = ScalerChoice::MinMax;
  double scaler_lo = 0.0;
  double scaler_hi = 3.141592653589793;
  std::optional<std::size_t> pca_k;
  bool balance = false;
  std::size_t server_val_count = 30;
  std::size_t server_test_count = 30;
  double client_train_fraction = 0.8;

  bool operator==(const DataConfig&) const = default;
};

struct SecurityConfig {
  bool dp_enabled = false;
  privacy::Mechanism mechanism = privacy::Mechanism::Laplace;
  double epsilon = 1.0;
  std::optional<double> delta;
  double sensitivity = 1.0;
  bool clip_nonnegative = true;
  std::optional<int> decimals;  // DP rounding
  bool qkd_enabled = false;
  qkd::CipherKind cipher = qkd::CipherKind::Shift256;
  double flip_probability = 0.0;
  double test_fraction = 0.1;
  std::size_t n_allowed = 0;
  int serialization_decimals = 12;

  bool operator==(const SecurityConfig&) const = default;
};

struct ExperimentConfig {
  ModelKind model = ModelKind::Vqc;
  unsigned num_qubits = 2;
  unsigned num_layers = 1;
  unsigned num_classes = 2;
  std::vector<std::size_t> devices{3};  // more than one value means a sweep
  int rounds = 2;
  optim::OptimizerConfig optimizer;
  std::optional<optim::OptimizerConfig> server_optimizer;
  SecurityConfig security;
  fl::FtMode ft_mode = fl::FtMode::NoFt;
  DataConfig data;
  std::uint64_t root_seed = 0;
  unsigned threads = 0;
  std::string output = "metrics.csv";

  // Cross-field checks; throws ConfigError naming the offending field.
  void validate() const;
};

bool operator==(const optim::OptimizerConfig& a, const optim::OptimizerConfig& b);
bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);

// Strict parse: unknown keys and wrong types are ConfigErrors. Runs
// validate() on the result.
ExperimentConfig from_json(const nlohmann::json& doc);
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

nlohmann::json to_json(const ExperimentConfig& cfg);

// One config per `devices` value; with several values each output path
// gets a "_devices<K>" suffix before its extension.
std::vector<ExperimentConfig> expand_sweep(const ExperimentConfig& cfg);

// "runs/metrics.csv" -> "runs/metrics.manifest.json"
std::string manifest_path(const std::string& output);

}  // namespace vqfl::config
