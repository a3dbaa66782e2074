// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/data/blobs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "vqfl/error.hpp"
#include "vqfl/rng.hpp"

namespace vqfl::data {

std::vector<std::size_t> allocate_counts(std::size_t n, const std::vector<double>& weights) {
  std::vector<std::size_t> counts(weights.size());
  std::vector<double> remainder(weights.size());
  std::size_t assigned = 0;
  for (std::size_t c = 0; c < weights.size(); ++c) {
    const double exact = weights[c] * static_cast<double>(n);
    counts[c] = static_cast<std::size_t>(std::floor(exact + 1e-9));
    remainder[c] = exact - static_cast<double>(counts[c]);
    assigned += counts[c];
  }
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t i = 0; assigned < n && i < order.size(); ++i, ++assigned) {
    ++counts[order[i]];
  }
  return counts;
}

models::LabeledDataset generate_blobs(const BlobSpec& spec) {
  if (spec.n_classes < 2) throw InvalidArgument("n_classes must be >= 2");
  if (spec.n_features == 0) throw InvalidArgument("n_features must be >= 1");
  if (spec.class_separation < 0.0 || spec.cluster_std < 0.0) {
    throw InvalidArgument("class_separation and cluster_std must be non-negative");
  }
  const auto n_classes = static_cast<std::size_t>(spec.n_classes);
  std::vector<double> weights = spec.class_weights;
  if (weights.empty()) weights.assign(n_classes, 1.0 / static_cast<double>(n_classes));
  if (weights.size() != n_classes) {
    throw InvalidArgument("class_weights has " + std::to_string(weights.size()) +
                          " entries for " + std::to_string(n_classes) + " classes");
  }
  if (std::any_of(weights.begin(), weights.end(), [](double w) { return w < 0.0; }) ||
      std::abs(std::accumulate(weights.begin(), weights.end(), 0.0) - 1.0) > 1e-9) {
    throw InvalidArgument("class_weights must be non-negative and sum to 1");
  }

  // Neighbouring vertices of a regular C-gon with radius r are 2 r sin(pi/C) apart.
  std::vector<std::vector<double>> centers(n_classes, std::vector<double>(spec.n_features, 0.0));
  for (std::size_t c = 0; c < n_classes; ++c) {
    if (spec.n_features == 1) {
      centers[c][0] = spec.class_separation * static_cast<double>(c);
    } else {
      const double radius =
          spec.class_separation / (2.0 * std::sin(std::numbers::pi / static_cast<double>(n_classes)));
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(c) / static_cast<double>(n_classes);
      centers[c][0] = radius * std::cos(angle);
      centers[c][1] = radius * std::sin(angle);
    }
  }

  Rng rng(spec.seed);
  Rng noise = rng.split("blob-noise");
  const std::vector<std::size_t> counts = allocate_counts(spec.n_samples, weights);
  std::vector<std::size_t> order(spec.n_samples);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng shuffle_rng = rng.split("blob-shuffle");
  shuffle_rng.shuffle(std::span<std::size_t>(order));

  std::vector<double> rows(spec.n_samples * spec.n_features);
  std::vector<int> labels(spec.n_samples);
  std::size_t k = 0;
  for (std::size_t c = 0; c < n_classes; ++c) {
    for (std::size_t i = 0; i < counts[c]; ++i, ++k) {
      const std::size_t slot = order[k];
      labels[slot] = static_cast<int>(c);
      for (std::size_t j = 0; j < spec.n_features; ++j) {
        rows[slot * spec.n_features + j] = centers[c][j] + spec.cluster_std * noise.normal();
      }
    }
  }
  return models::LabeledDataset(std::move(rows), spec.n_features, std::move(labels));
}

}  // namespace vqfl::data
