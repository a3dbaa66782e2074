// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "vqfl/models/dataset.hpp"

namespace vqfl::data {

struct BlobSpec {
  std::size_t n_samples = 200;
  std::size_t n_features = 2;
  int n_classes = 2;
  // Distance between neighbouring class centres.
  double class_separation = 3.0;
  // Empty means uniform.
  std::vector<double> class_weights;
  double cluster_std = 1.0;
  std::uint64_t seed = 0;
};

// Isotropic Gaussian clusters. Class centres sit on a regular polygon in the
// first two feature dimensions (on a line when there is only one feature),
// neighbouring centres `class_separation` apart. Label counts follow the
// weights by largest-remainder allocation; rows are shuffled.
models::LabeledDataset generate_blobs(const BlobSpec& spec);

// Largest-remainder split of n into len(weights) counts.
std::vector<std::size_t> allocate_counts(std::size_t n, const std::vector<double>& weights);

}  // namespace vqfl::data
