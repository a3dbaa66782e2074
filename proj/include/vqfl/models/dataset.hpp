// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace vqfl::models {

// Row-major feature matrix with one integer class id per row.
class LabeledDataset {
 public:
  LabeledDataset() = default;
  explicit LabeledDataset(std::size_t num_features) : num_features_(num_features) {}
  // Throws InvalidArgument when the sizes disagree or a label is negative.
  LabeledDataset(std::vector<double> features, std::size_t num_features,
                 std::vector<int> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  std::size_t num_features() const noexcept { return num_features_; }

  std::span<const double> row(std::size_t i) const {
    return {features_.data() + i * num_features_, num_features_};
  }
  std::span<double> row(std::size_t i) {
    return {features_.data() + i * num_features_, num_features_};
  }
  int label(std::size_t i) const { return labels_[i]; }

  std::span<const double> features() const noexcept { return features_; }
  std::span<const int> labels() const noexcept { return labels_; }

  void push_back(std::span<const double> x, int label);
  LabeledDataset subset(std::span<const std::size_t> indices) const;

  // Highest label + 1 (0 for an empty set).
  int num_classes() const noexcept;
  std::vector<std::size_t> class_counts(int num_classes) const;

  // Throws InvalidArgument if any label is outside [0, num_classes).
  void check_labels(int num_classes) const;

 private:
  std::size_t num_features_ = 0;
  std::vector<double> features_;
  std::vector<int> labels_;
};

}  // namespace vqfl::models
