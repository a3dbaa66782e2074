// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/models/dataset.hpp"

#include <algorithm>
#include <string>

#include "vqfl/error.hpp"

namespace vqfl::models {

LabeledDataset::LabeledDataset(std::vector<double> features, std::size_t num_features,
                               std::vector<int> labels)
    : num_features_(num_features), features_(std::move(features)), labels_(std::move(labels)) {
  if (features_.size() != labels_.size() * num_features_) {
    throw InvalidArgument("feature matrix has " + std::to_string(features_.size()) +
                          " values, expected " +
                          std::to_string(labels_.size() * num_features_));
  }
  if (std::any_of(labels_.begin(), labels_.end(), [](int l) { return l < 0; })) {
    throw InvalidArgument("labels must be non-negative");
  }
}

void LabeledDataset::push_back(std::span<const double> x, int label) {
  if (x.size() != num_features_) {
    throw InvalidArgument("row has " + std::to_string(x.size()) + " features, expected " +
                          std::to_string(num_features_));
  }
  if (label < 0) throw InvalidArgument("labels must be non-negative");
  features_.insert(features_.end(), x.begin(), x.end());
  labels_.push_back(label);
}

LabeledDataset LabeledDataset::subset(std::span<const std::size_t> indices) const {
  LabeledDataset out(num_features_);
  out.features_.reserve(indices.size() * num_features_);
  out.labels_.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= size()) throw InvalidArgument("subset index out of range");
    const auto r = row(i);
    out.features_.insert(out.features_.end(), r.begin(), r.end());
    out.labels_.push_back(labels_[i]);
  }
  return out;
}

int LabeledDataset::num_classes() const noexcept {
  if (labels_.empty()) return 0;
  return *std::max_element(labels_.begin(), labels_.end()) + 1;
}

std::vector<std::size_t> LabeledDataset::class_counts(int num_classes) const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(std::max(num_classes, 0)), 0);
  for (int l : labels_) {
    if (l < num_classes) ++counts[static_cast<std::size_t>(l)];
  }
  return counts;
}

void LabeledDataset::check_labels(int num_classes) const {
  for (int l : labels_) {
    if (l < 0 || l >= num_classes) {
      throw InvalidArgument("label " + std::to_string(l) + " outside [0, " +
                            std::to_string(num_classes) + ")");
    }
  }
}

}  // namespace vqfl::models
