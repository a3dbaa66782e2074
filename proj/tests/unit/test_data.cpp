// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <set>

#include "vqfl/data/blobs.hpp"
#include "vqfl/data/csv.hpp"
#include "vqfl/data/partition.hpp"
#include "vqfl/data/pca.hpp"
#include "vqfl/data/scaler.hpp"
#include "vqfl/error.hpp"
#include "vqfl/rng.hpp"

namespace {

using vqfl::models::LabeledDataset;
using namespace vqfl::data;

LabeledDataset random_data(std::size_t n, std::size_t d, std::uint64_t seed) {
  vqfl::Rng rng(seed);
  LabeledDataset data(d);
  std::vector<double> row(d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) row[j] = rng.normal() * (1.0 + j) + 0.5 * j;
    // correlate the first two columns
    if (d >= 2) row[1] += 0.8 * row[0];
    data.push_back(row, static_cast<int>(rng.below(2)));
  }
  return data;
}

LabeledDataset labelled(const std::vector<std::size_t>& counts) {
  LabeledDataset d(1);
  for (std::size_t c = 0; c < counts.size(); ++c) {
    for (std::size_t i = 0; i < counts[c]; ++i) {
      d.push_back(std::vector<double>{static_cast<double>(d.size())}, static_cast<int>(c));
    }
  }
  return d;
}

TEST(Blobs, EqualWeights) {
  BlobSpec s;
  s.n_samples = 100;
  s.class_weights = {0.5, 0.5};
  const auto d = generate_blobs(s);
  EXPECT_EQ(d.size(), 100u);
  EXPECT_EQ(d.class_counts(2), (std::vector<std::size_t>{50, 50}));
}

TEST(Blobs, ProportionalCounts) {
  BlobSpec s;
  s.n_samples = 1000;
  s.class_weights = {0.9, 0.1};
  EXPECT_EQ(generate_blobs(s).class_counts(2), (std::vector<std::size_t>{900, 100}));
  EXPECT_EQ(allocate_counts(10, {1.0 / 3, 1.0 / 3, 1.0 / 3}),
            (std::vector<std::size_t>{4, 3, 3}));
}

TEST(Blobs, ZeroSeparationSharesCentre) {
  BlobSpec s;
  s.n_samples = 4000;
  s.class_separation = 0.0;
  s.seed = 3;
  const auto d = generate_blobs(s);
  std::array<double, 2> mean{};
  std::array<int, 2> count{};
  for (std::size_t i = 0; i < d.size(); ++i) {
    mean[d.label(i)] += d.row(i)[0];
    ++count[d.label(i)];
  }
  EXPECT_NEAR(mean[0] / count[0], mean[1] / count[1], 0.15);
}

TEST(Blobs, CentresSeparatedByRequestedDistance) {
  BlobSpec s;
  s.n_samples = 20000;
  s.n_classes = 3;
  s.n_features = 3;
  s.class_separation = 4.0;
  s.cluster_std = 0.5;
  s.seed = 4;
  const auto d = generate_blobs(s);
  std::vector<std::array<double, 3>> mean(3, {0, 0, 0});
  std::vector<int> count(3, 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (int j = 0; j < 3; ++j) mean[d.label(i)][j] += d.row(i)[j];
    ++count[d.label(i)];
  }
  for (int c = 0; c < 3; ++c) {
    for (int j = 0; j < 3; ++j) mean[c][j] /= count[c];
  }
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3;
    double dist2 = 0;
    for (int j = 0; j < 3; ++j) dist2 += std::pow(mean[a][j] - mean[b][j], 2);
    EXPECT_NEAR(std::sqrt(dist2), 4.0, 0.05);
  }
}

TEST(Blobs, Deterministic) {
  BlobSpec s;
  s.seed = 99;
  const auto a = generate_blobs(s);
  const auto b = generate_blobs(s);
  EXPECT_TRUE(std::equal(a.features().begin(), a.features().end(), b.features().begin()));
}

TEST(Blobs, InvalidSpecs) {
  BlobSpec s;
  s.class_weights = {0.5, 0.4};
  EXPECT_THROW(generate_blobs(s), vqfl::InvalidArgument);
  s.class_weights = {0.5, 0.5, 0.0};
  EXPECT_THROW(generate_blobs(s), vqfl::InvalidArgument);
  s.class_weights = {1.2, -0.2};
  EXPECT_THROW(generate_blobs(s), vqfl::InvalidArgument);
  BlobSpec t;
  t.n_classes = 1;
  EXPECT_THROW(generate_blobs(t), vqfl::InvalidArgument);
}

TEST(Scaler, StandardExample) {
  const LabeledDataset d({0.0, 2.0}, 1, {0, 1});
  const auto out = scaler_transform(d, scaler_fit(d, ScalerKind::Standard));
  EXPECT_DOUBLE_EQ(out.row(0)[0], -1.0);
  EXPECT_DOUBLE_EQ(out.row(1)[0], 1.0);
}

TEST(Scaler, MinMaxOntoSymmetricRange) {
  const double pi = std::numbers::pi;
  const LabeledDataset d({0.0, 1.0}, 1, {0, 1});
  const auto out = scaler_transform(d, scaler_fit(d, ScalerKind::MinMax, -pi, pi));
  EXPECT_NEAR(out.row(0)[0], -pi, 1e-15);
  EXPECT_NEAR(out.row(1)[0], pi, 1e-15);
}

TEST(Scaler, StandardStatistics) {
  const auto d = random_data(500, 4, 5);
  const auto out = scaler_transform(d, scaler_fit(d, ScalerKind::Standard));
  for (std::size_t j = 0; j < 4; ++j) {
    double m = 0, v = 0;
    for (std::size_t i = 0; i < out.size(); ++i) m += out.row(i)[j];
    m /= out.size();
    for (std::size_t i = 0; i < out.size(); ++i) v += std::pow(out.row(i)[j] - m, 2);
    v /= out.size();
    EXPECT_NEAR(m, 0.0, 1e-9);
    EXPECT_NEAR(v, 1.0, 1e-9);
  }
}

TEST(Scaler, InverseRoundTrip) {
  const auto d = random_data(100, 3, 6);
  for (ScalerKind k : {ScalerKind::Standard, ScalerKind::MinMax}) {
    const auto p = scaler_fit(d, k, -2.0, 5.0);
    const auto back = scaler_inverse(scaler_transform(d, p), p);
    for (std::size_t i = 0; i < d.features().size(); ++i) {
      ASSERT_NEAR(back.features()[i], d.features()[i], 1e-9);
    }
  }
}

TEST(Scaler, DegenerateFeatures) {
  const LabeledDataset d({3.0, 3.0, 3.0}, 1, {0, 1, 0});
  const auto s = scaler_transform(d, scaler_fit(d, ScalerKind::Standard));
  const auto m = scaler_transform(d, scaler_fit(d, ScalerKind::MinMax, 0.0, 2.0));
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(s.row(i)[0], 0.0);
    EXPECT_EQ(m.row(i)[0], 1.0);
  }
}

TEST(Scaler, Errors) {
  EXPECT_THROW(scaler_fit(LabeledDataset(2), ScalerKind::Standard), vqfl::InvalidArgument);
  const LabeledDataset d({0.0, 1.0}, 1, {0, 1});
  EXPECT_THROW(scaler_fit(d, ScalerKind::MinMax, 1.0, 1.0), vqfl::InvalidArgument);
  const auto p = scaler_fit(d, ScalerKind::Standard);
  EXPECT_THROW(scaler_transform(random_data(3, 2, 1), p), vqfl::InvalidArgument);
}

TEST(Pca, FullRankReconstruction) {
  const auto d = random_data(200, 5, 7);
  const auto model = pca_fit(d, 5);
  const auto back = pca_inverse_transform(pca_transform(d, model), model);
  for (std::size_t i = 0; i < d.features().size(); ++i) {
    ASSERT_NEAR(back.features()[i], d.features()[i], 1e-8);
  }
}

TEST(Pca, ComponentsOrthonormal) {
  const auto model = pca_fit(random_data(300, 6, 8), 6);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      double dot = 0;
      for (std::size_t k = 0; k < 6; ++k) dot += model.components[i][k] * model.components[j][k];
      EXPECT_NEAR(dot, i == j ? 1.0 : 0.0, 1e-8);
    }
  }
}

TEST(Pca, DiagonalDataFirstComponent) {
  vqfl::Rng rng(9);
  LabeledDataset d(2);
  for (int i = 0; i < 200; ++i) {
    const double t = rng.normal();
    d.push_back(std::vector<double>{t, t}, 0);
  }
  const auto model = pca_fit(d, 1);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(model.components[0][0]), r, 1e-6);
  EXPECT_NEAR(std::abs(model.components[0][1]), r, 1e-6);
  EXPECT_GT(model.components[0][0] * model.components[0][1], 0.0);
}

TEST(Pca, EigenvaluesMatchIndependentSolver) {
  const auto d = random_data(400, 6, 10);
  const auto model = pca_fit(d, 6);
  for (std::size_t i = 1; i < 6; ++i) {
    EXPECT_LE(model.explained_variance[i], model.explained_variance[i - 1]);
  }
  Eigen::MatrixXd x(d.size(), 6);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < 6; ++j) x(i, j) = d.row(i)[j];
  }
  const Eigen::MatrixXd centred = x.rowwise() - x.colwise().mean();
  const Eigen::MatrixXd cov = centred.transpose() * centred / double(d.size() - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  const Eigen::VectorXd ev = solver.eigenvalues().reverse();
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(model.explained_variance[i], ev(i), 1e-8);
}

TEST(Pca, JacobiOnKnownMatrix) {
  const auto e = jacobi_eigen({{2.0, 1.0}, {1.0, 2.0}});
  EXPECT_NEAR(e.values[0], 3.0, 1e-12);
  EXPECT_NEAR(e.values[1], 1.0, 1e-12);
  EXPECT_THROW(jacobi_eigen({{1.0, 2.0}}), vqfl::InvalidArgument);
}

TEST(Pca, SignConvention) {
  const auto model = pca_fit(random_data(100, 4, 11), 4);
  for (const auto& c : model.components) {
    const auto it = std::max_element(c.begin(), c.end(),
                                     [](double a, double b) { return std::abs(a) < std::abs(b); });
    EXPECT_GT(*it, 0.0);
  }
}

TEST(Pca, ReducesWidth) {
  const auto d = random_data(50, 5, 12);
  const auto r = pca_transform(d, pca_fit(d, 2));
  EXPECT_EQ(r.num_features(), 2u);
  EXPECT_EQ(r.size(), 50u);
  EXPECT_EQ(std::vector<int>(r.labels().begin(), r.labels().end()),
            std::vector<int>(d.labels().begin(), d.labels().end()));
}

TEST(Pca, Errors) {
  const auto d = random_data(10, 3, 13);
  EXPECT_THROW(pca_fit(d, 0), vqfl::InvalidArgument);
  EXPECT_THROW(pca_fit(d, 4), vqfl::InvalidArgument);
  EXPECT_THROW(pca_fit(random_data(1, 3, 1), 2), vqfl::InvalidArgument);
}

TEST(Partition, EqualShards) {
  const auto plan = partition(100, 10, 0, 0, 1);
  ASSERT_EQ(plan.shards.size(), 10u);
  for (const auto& s : plan.shards) EXPECT_EQ(s.size(), 10u);
}

TEST(Partition, RemainderGoesToFirstShards) {
  const auto plan = partition(23, 5, 0, 0, 2);
  const std::vector<std::size_t> sizes{5, 5, 5, 4, 4};
  for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(plan.shards[k].size(), sizes[k]);
}

TEST(Partition, DisjointAndCovering) {
  const auto plan = partition(157, 7, 20, 15, 3);
  std::set<std::size_t> seen;
  std::size_t total = 0;
  auto add = [&](const std::vector<std::size_t>& v) {
    for (std::size_t i : v) seen.insert(i);
    total += v.size();
  };
  for (const auto& s : plan.shards) add(s);
  add(plan.server_validation);
  add(plan.server_test);
  EXPECT_EQ(total, 157u);
  EXPECT_EQ(seen.size(), 157u);
  EXPECT_EQ(plan.server_validation.size(), 20u);
  EXPECT_EQ(plan.server_test.size(), 15u);
}

TEST(Partition, Deterministic) {
  const auto a = partition(50, 3, 5, 5, 7);
  const auto b = partition(50, 3, 5, 5, 7);
  EXPECT_EQ(a.shards, b.shards);
  EXPECT_EQ(a.server_test, b.server_test);
  EXPECT_NE(a.shards, partition(50, 3, 5, 5, 8).shards);
}

TEST(Partition, InsufficientSamples) {
  EXPECT_THROW(partition(10, 5, 3, 3, 0), vqfl::InvalidArgument);
  EXPECT_THROW(partition(10, 0, 0, 0, 0), vqfl::InvalidArgument);
}

TEST(Balance, MinCountRule) {
  EXPECT_EQ(balance_classes(labelled({900, 100}), 1).class_counts(2),
            (std::vector<std::size_t>{100, 100}));
  EXPECT_EQ(balance_classes(labelled({40, 40, 40}), 1).class_counts(3),
            (std::vector<std::size_t>{40, 40, 40}));
}

TEST(Balance, LargeImbalance) {
  EXPECT_EQ(balance_classes(labelled({26102, 33115}), 4).class_counts(2),
            (std::vector<std::size_t>{26102, 26102}));
}

TEST(Balance, NoDuplicatesAndPartitionStaysDisjoint) {
  const auto d = labelled({300, 120, 200});
  const auto keep = balanced_indices(d, 5);
  EXPECT_EQ(std::set<std::size_t>(keep.begin(), keep.end()).size(), keep.size());
  const auto b = d.subset(keep);
  const auto plan = partition(b.size(), 4, 10, 10, 6);
  std::set<double> ids;
  std::size_t total = 0;
  for (const auto& s : plan.shards) {
    for (std::size_t i : s) {
      ids.insert(b.row(i)[0]);
      ++total;
    }
  }
  EXPECT_EQ(ids.size(), total);
}

TEST(Split, EightTwo) {
  const auto d = labelled({5, 5});
  const auto [train, test] = train_test_split(d, 0.8, 3);
  EXPECT_EQ(train.size(), 8u);
  EXPECT_EQ(test.size(), 2u);
  std::set<double> ids;
  for (std::size_t i = 0; i < 8; ++i) ids.insert(train.row(i)[0]);
  for (std::size_t i = 0; i < 2; ++i) ids.insert(test.row(i)[0]);
  EXPECT_EQ(ids.size(), 10u);
  EXPECT_THROW(train_test_split(d, 1.0, 3), vqfl::InvalidArgument);
  EXPECT_THROW(train_test_split(d, 0.0, 3), vqfl::InvalidArgument);
}

TEST(Csv, LabelEncodingFirstAppearance) {
  const auto e = label_encode({"car", "truck", "car"});
  EXPECT_EQ(e.labels, (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(e.names, (std::vector<std::string>{"car", "truck"}));
}

TEST(Csv, IntegerLabelsPassThrough) {
  const auto d = parse_csv("a,b,label\n1,2,1\n3,4,0\n5,6,1\n");
  EXPECT_EQ(d.data.label(0), 1);
  EXPECT_EQ(d.data.label(1), 0);
  EXPECT_EQ(d.feature_names, (std::vector<std::string>{"a", "b"}));
  EXPECT_DOUBLE_EQ(d.data.row(2)[1], 6.0);
}

TEST(Csv, TextLabels) {
  const auto d = parse_csv("x,label\n0.5,pedestrian\n1.5,car\n2.5,pedestrian\n");
  EXPECT_EQ(d.data.label(0), 0);
  EXPECT_EQ(d.data.label(1), 1);
  EXPECT_EQ(d.label_names[1], "car");
}

TEST(Csv, RoundTripThroughFile) {
  BlobSpec s;
  s.n_samples = 57;
  s.n_features = 3;
  s.n_classes = 3;
  s.seed = 21;
  const auto d = generate_blobs(s);
  const auto path = (std::filesystem::temp_directory_path() / "vqfl_csv_roundtrip.csv").string();
  write_csv(path, d);
  const auto back = load_csv(path);
  std::filesystem::remove(path);
  ASSERT_EQ(back.data.size(), d.size());
  for (std::size_t i = 0; i < d.features().size(); ++i) {
    ASSERT_NEAR(back.data.features()[i], d.features()[i], 1e-9);
  }
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(back.data.label(i), d.label(i));
}

TEST(Csv, MalformedInputs) {
  EXPECT_THROW(parse_csv(""), vqfl::InvalidArgument);
  EXPECT_THROW(parse_csv("label\n1\n"), vqfl::InvalidArgument);
  EXPECT_THROW(parse_csv("a,label\n"), vqfl::InvalidArgument);
  EXPECT_THROW(parse_csv("a,label\n1,2,3\n"), vqfl::InvalidArgument);
  EXPECT_THROW(parse_csv("a,label\nabc,1\n"), vqfl::InvalidArgument);
  EXPECT_THROW(parse_csv("a,label\n1,\n"), vqfl::InvalidArgument);
  EXPECT_THROW(load_csv("/nonexistent/vqfl.csv"), vqfl::InvalidArgument);
}

}  // namespace
