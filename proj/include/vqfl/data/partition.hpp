// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vqfl/models/dataset.hpp"

namespace vqfl::data {

struct PartitionPlan {
  std::size_t num_devices = 0;
  std::vector<std::vector<std::size_t>> shards;
  std::vector<std::size_t> server_validation;
  std::vector<std::size_t> server_test;
};

// Uniform shuffle, then server holdouts (validation first, then test), then
// K near-equal IID shards; the first (n mod K) shards get one extra row.
PartitionPlan partition(std::size_t n_samples, std::size_t num_devices,
                        std::size_t server_val_count, std::size_t server_test_count,
                        std::uint64_t seed);

// Row indices that keep min-count rows of every present class, chosen
// uniformly without replacement, in ascending order.
std::vector<std::size_t> balanced_indices(const models::LabeledDataset& data, std::uint64_t seed);
models::LabeledDataset balance_classes(const models::LabeledDataset& data, std::uint64_t seed);

// Seeded shuffle-then-cut; the first part has round(fraction * n) rows,
// clamped so both parts are non-empty when n >= 2.
std::pair<models::LabeledDataset, models::LabeledDataset> train_test_split(
    const models::LabeledDataset& data, double fraction, std::uint64_t seed);

}  // namespace vqfl::data
