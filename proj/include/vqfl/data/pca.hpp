// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "vqfl/models/dataset.hpp"

namespace vqfl::data {

struct PcaModel {
  std::vector<double> mean;
  // k orthonormal rows of length n_features, ordered by explained variance.
  std::vector<std::vector<double>> components;
  std::vector<double> explained_variance;  // non-increasing
};

// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
struct SymmetricEigen {
  std::vector<double> values;                // descending
  std::vector<std::vector<double>> vectors;  // vectors[i] pairs with values[i]
  int sweeps = 0;
};
SymmetricEigen jacobi_eigen(std::vector<std::vector<double>> matrix, double tol = 1e-12,
                            int max_sweeps = 100);

// Sample covariance (n - 1 denominator) of the feature columns.
std::vector<std::vector<double>> covariance(const models::LabeledDataset& data,
                                            const std::vector<double>& mean);

// Top-k principal directions. Each component is sign-normalised so its
// largest-magnitude entry is positive.
PcaModel pca_fit(const models::LabeledDataset& data, std::size_t k);
models::LabeledDataset pca_transform(const models::LabeledDataset& data, const PcaModel& model);
models::LabeledDataset pca_inverse_transform(const models::LabeledDataset& reduced,
                                             const PcaModel& model);

}  // namespace vqfl::data
