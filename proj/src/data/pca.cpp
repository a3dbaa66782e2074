// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/data/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vqfl/error.hpp"

namespace vqfl::data {

SymmetricEigen jacobi_eigen(std::vector<std::vector<double>> a, double tol, int max_sweeps) {
  const std::size_t d = a.size();
  std::vector<std::vector<double>> v(d, std::vector<double>(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].size() != d) throw InvalidArgument("jacobi_eigen needs a square matrix");
    v[i][i] = 1.0;
  }

  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) off += a[p][q] * a[p][q];
    }
    if (std::sqrt(off) < tol) break;

    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = a[q][p] = 0.0;
        for (std::size_t r = 0; r < d; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r][p], arq = a[r][q];
          a[r][p] = a[p][r] = c * arp - s * arq;
          a[r][q] = a[q][r] = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < d; ++r) {
          const double vrp = v[r][p], vrq = v[r][q];
          v[r][p] = c * vrp - s * vrq;
          v[r][q] = s * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x][x] > a[y][y]; });
  SymmetricEigen out;
  out.sweeps = sweep;
  for (std::size_t idx : order) {
    out.values.push_back(a[idx][idx]);
    std::vector<double> vec(d);
    for (std::size_t r = 0; r < d; ++r) vec[r] = v[r][idx];
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

std::vector<std::vector<double>> covariance(const models::LabeledDataset& data,
                                            const std::vector<double>& mean) {
  const std::size_t d = data.num_features();
  std::vector<std::vector<double>> cov(d, std::vector<double>(d, 0.0));
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto r = data.row(i);
    for (std::size_t p = 0; p < d; ++p) {
      const double dp = r[p] - mean[p];
      for (std::size_t q = p; q < d; ++q) cov[p][q] += dp * (r[q] - mean[q]);
    }
  }
  const auto denom = static_cast<double>(data.size() - 1);
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = p; q < d; ++q) cov[q][p] = cov[p][q] = cov[p][q] / denom;
  }
  return cov;
}

PcaModel pca_fit(const models::LabeledDataset& data, std::size_t k) {
  const std::size_t d = data.num_features();
  if (k == 0 || k > d) {
    throw InvalidArgument("pca k must lie in [1, " + std::to_string(d) + "], got " +
                          std::to_string(k));
  }
  if (data.size() < 2) throw InvalidArgument("PCA needs at least two samples");

  PcaModel model;
  model.mean.assign(d, 0.0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto r = data.row(i);
    for (std::size_t j = 0; j < d; ++j) model.mean[j] += r[j];
  }
  for (double& m : model.mean) m /= static_cast<double>(data.size());

  SymmetricEigen eig = jacobi_eigen(covariance(data, model.mean));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double> comp = std::move(eig.vectors[i]);
    std::size_t lead = 0;
    for (std::size_t j = 1; j < d; ++j) {
      if (std::abs(comp[j]) > std::abs(comp[lead])) lead = j;
    }
    if (comp[lead] < 0.0) {
      for (double& c : comp) c = -c;
    }
    model.components.push_back(std::move(comp));
    // Round-off can leave a tiny negative eigenvalue on rank-deficient data.
    model.explained_variance.push_back(std::max(eig.values[i], 0.0));
  }
  return model;
}

models::LabeledDataset pca_transform(const models::LabeledDataset& data, const PcaModel& model) {
  const std::size_t d = data.num_features();
  if (model.mean.size() != d) throw InvalidArgument("PCA was fitted on a different width");
  const std::size_t k = model.components.size();
  std::vector<double> out(data.size() * k, 0.0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto r = data.row(i);
    for (std::size_t c = 0; c < k; ++c) {
      double dot = 0.0;
      for (std::size_t j = 0; j < d; ++j) dot += (r[j] - model.mean[j]) * model.components[c][j];
      out[i * k + c] = dot;
    }
  }
  const auto labels = data.labels();
  return models::LabeledDataset(std::move(out), k, std::vector<int>(labels.begin(), labels.end()));
}

models::LabeledDataset pca_inverse_transform(const models::LabeledDataset& reduced,
                                             const PcaModel& model) {
  const std::size_t k = model.components.size();
  if (reduced.num_features() != k) throw InvalidArgument("reduced data width does not match k");
  const std::size_t d = model.mean.size();
  std::vector<double> out(reduced.size() * d);
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    const auto r = reduced.row(i);
    for (std::size_t j = 0; j < d; ++j) {
      double v = model.mean[j];
      for (std::size_t c = 0; c < k; ++c) v += r[c] * model.components[c][j];
      out[i * d + j] = v;
    }
  }
  const auto labels = reduced.labels();
  return models::LabeledDataset(std::move(out), d, std::vector<int>(labels.begin(), labels.end()));
}

}  // namespace vqfl::data
