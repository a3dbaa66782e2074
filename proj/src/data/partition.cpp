// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/data/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "vqfl/error.hpp"
#include "vqfl/rng.hpp"

namespace vqfl::data {

PartitionPlan partition(std::size_t n_samples, std::size_t num_devices,
                        std::size_t server_val_count, std::size_t server_test_count,
                        std::uint64_t seed) {
  if (num_devices == 0) throw InvalidArgument("partition needs at least one device");
  if (num_devices + server_val_count + server_test_count > n_samples) {
    throw InvalidArgument("not enough samples: " + std::to_string(n_samples) + " rows for " +
                          std::to_string(num_devices) + " devices plus " +
                          std::to_string(server_val_count + server_test_count) +
                          " server holdout rows");
  }
  std::vector<std::size_t> perm(n_samples);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rng rng = Rng(seed).split("partition");
  rng.shuffle(std::span<std::size_t>(perm));

  PartitionPlan plan;
  plan.num_devices = num_devices;
  auto it = perm.begin();
  plan.server_validation.assign(it, it + static_cast<std::ptrdiff_t>(server_val_count));
  it += static_cast<std::ptrdiff_t>(server_val_count);
  plan.server_test.assign(it, it + static_cast<std::ptrdiff_t>(server_test_count));
  it += static_cast<std::ptrdiff_t>(server_test_count);

  const auto remaining = static_cast<std::size_t>(perm.end() - it);
  const std::size_t base = remaining / num_devices;
  const std::size_t extra = remaining % num_devices;
  for (std::size_t k = 0; k < num_devices; ++k) {
    const std::size_t size = base + (k < extra ? 1 : 0);
    plan.shards.emplace_back(it, it + static_cast<std::ptrdiff_t>(size));
    it += static_cast<std::ptrdiff_t>(size);
  }
  return plan;
}

std::vector<std::size_t> balanced_indices(const models::LabeledDataset& data, std::uint64_t seed) {
  const int classes = data.num_classes();
  std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(classes));
  for (std::size_t i = 0; i < data.size(); ++i) {
    members[static_cast<std::size_t>(data.label(i))].push_back(i);
  }
  std::size_t min_count = data.size();
  for (const auto& m : members) {
    if (!m.empty()) min_count = std::min(min_count, m.size());
  }

  Rng rng = Rng(seed).split("balance");
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < members.size(); ++c) {
    const auto& m = members[c];
    if (m.empty()) continue;
    Rng class_rng = rng.split("class", c);
    for (std::size_t pos : class_rng.sample_indices(m.size(), min_count)) keep.push_back(m[pos]);
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

models::LabeledDataset balance_classes(const models::LabeledDataset& data, std::uint64_t seed) {
  const std::vector<std::size_t> keep = balanced_indices(data, seed);
  return data.subset(keep);
}

std::pair<models::LabeledDataset, models::LabeledDataset> train_test_split(
    const models::LabeledDataset& data, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw InvalidArgument("split fraction must lie in (0, 1)");
  }
  const std::size_t n = data.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rng rng = Rng(seed).split("split");
  rng.shuffle(std::span<std::size_t>(perm));

  auto cut = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  if (n >= 2) cut = std::clamp<std::size_t>(cut, 1, n - 1);
  const std::span<const std::size_t> all(perm);
  return {data.subset(all.first(cut)), data.subset(all.subspan(cut))};
}

}  // namespace vqfl::data
