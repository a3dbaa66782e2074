// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/experiment.hpp"

#include "vqfl/data/blobs.hpp"
#include "vqfl/data/csv.hpp"
#include "vqfl/data/partition.hpp"
#include "vqfl/data/pca.hpp"
#include "vqfl/data/scaler.hpp"
#include "vqfl/error.hpp"
#include "vqfl/rng.hpp"

namespace vqfl {

std::uint64_t derive_seed(std::uint64_t root, const std::string& purpose) {
  return Rng(root).split(purpose)();
}

models::Model make_model(const config::ExperimentConfig& cfg) {
  if (cfg.model == config::ModelKind::Qcnn) return models::QcnnModel::make(cfg.num_qubits);
  return models::VqcModel::make(cfg.num_qubits, cfg.num_layers, cfg.num_classes);
}

PreparedData prepare_data(const config::ExperimentConfig& cfg) {
  if (cfg.devices.size() != 1) {
    throw ConfigError("devices", "prepare_data needs a single device count; expand the sweep first");
  }
  const config::DataConfig& dc = cfg.data;

  models::LabeledDataset data;
  if (dc.source == config::DataSource::Blobs) {
    data::BlobSpec spec;
    spec.n_samples = dc.blobs.n_samples;
    spec.n_features = dc.blobs.n_features;
    spec.n_classes = static_cast<int>(cfg.num_classes);
    spec.class_separation = dc.blobs.class_separation;
    spec.class_weights = dc.blobs.class_weights;
    spec.cluster_std = dc.blobs.cluster_std;
    spec.seed = derive_seed(cfg.root_seed, "blobs");
    try {
      data = data::generate_blobs(spec);
    } catch (const InvalidArgument& e) {
      throw ConfigError("data.blobs", e.what());
    }
  } else {
    try {
      data = data::load_csv(dc.csv_path).data;
    } catch (const InvalidArgument& e) {
      throw ConfigError("data.csv_path", e.what());
    }
  }

  if (dc.balance) data = data::balance_classes(data, derive_seed(cfg.root_seed, "balance"));
  if (dc.pca_k) {
    if (*dc.pca_k > data.num_features()) {
      throw ConfigError("data.pca_k", "exceeds the dataset's " + std::to_string(data.num_features()) +
                                          " features");
    }
    data = data::pca_transform(data, data::pca_fit(data, *dc.pca_k));
  }
  if (dc.scaler != config::ScalerChoice::None) {
    const auto kind = dc.scaler == config::ScalerChoice::Standard ? data::ScalerKind::Standard
                                                                   : data::ScalerKind::MinMax;
    data = data::scaler_transform(data, data::scaler_fit(data, kind, dc.scaler_lo, dc.scaler_hi));
  }

  if (data.num_features() != cfg.num_qubits) {
    throw ConfigError("num_qubits", "dataset has " + std::to_string(data.num_features()) +
                                        " features after preprocessing, expected " +
                                        std::to_string(cfg.num_qubits));
  }
  if (data.num_classes() > static_cast<int>(cfg.num_classes)) {
    throw ConfigError("num_classes", "dataset has " + std::to_string(data.num_classes()) +
                                         " classes but num_classes is " +
                                         std::to_string(cfg.num_classes));
  }

  const std::size_t k = cfg.devices.front();
  data::PartitionPlan plan;
  try {
    plan = data::partition(data.size(), k, dc.server_val_count, dc.server_test_count,
                           derive_seed(cfg.root_seed, "partition"));
  } catch (const InvalidArgument& e) {
    throw ConfigError("devices", e.what());
  }

  PreparedData out;
  out.server.validation_set = data.subset(plan.server_validation);
  out.server.test_set = data.subset(plan.server_test);
  const std::uint64_t split_seed = derive_seed(cfg.root_seed, "client-split");
  for (std::size_t i = 0; i < k; ++i) {
    const models::LabeledDataset shard = data.subset(plan.shards[i]);
    fl::ClientState client;
    client.id = i;
    if (shard.size() >= 2) {
      auto [train, test] = data::train_test_split(shard, dc.client_train_fraction,
                                                  Rng(split_seed).split("client", i)());
      client.train_set = std::move(train);
      client.test_set = std::move(test);
    } else {
      client.train_set = shard;
      client.test_set = models::LabeledDataset(shard.num_features());
    }
    out.clients.push_back(std::move(client));
  }
  return out;
}

fl::EngineConfig make_engine_config(const config::ExperimentConfig& cfg) {
  fl::EngineConfig e;
  e.model = make_model(cfg);
  e.rounds = cfg.rounds;
  e.local_opt = cfg.optimizer;
  e.server_opt = cfg.server_optimizer;
  e.security = {cfg.security.dp_enabled, cfg.security.qkd_enabled};
  e.dp = {cfg.security.mechanism,   cfg.security.epsilon,          cfg.security.delta,
          cfg.security.sensitivity, cfg.security.clip_nonnegative, cfg.security.decimals};
  e.link.decimals = cfg.security.serialization_decimals;
  e.link.qkd.enabled = cfg.security.qkd_enabled;
  e.link.qkd.cipher = cfg.security.cipher;
  e.link.qkd.channel.flip_probability = cfg.security.flip_probability;
  e.link.qkd.test_fraction = cfg.security.test_fraction;
  e.link.qkd.n_allowed = cfg.security.n_allowed;
  e.ft_mode = cfg.ft_mode;
  e.root_seed = cfg.root_seed;
  e.threads = cfg.threads;
  return e;
}

fl::ExperimentResult run_experiment(const config::ExperimentConfig& cfg) {
  cfg.validate();
  PreparedData prepared = prepare_data(cfg);
  return fl::run_federated(make_engine_config(cfg), std::move(prepared.clients),
                           std::move(prepared.server));
}

}  // namespace vqfl
