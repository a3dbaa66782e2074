// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "vqfl/models/dataset.hpp"

namespace vqfl::data {

struct LabelEncoding {
  std::vector<int> labels;
  std::vector<std::string> names;  // names[id] is the raw label for class id
};

// Distinct labels get ids 0..C-1 in order of first appearance. When every
// raw label is a non-negative integer the values are kept as the ids.
LabelEncoding label_encode(const std::vector<std::string>& raw);

struct CsvDataset {
  models::LabeledDataset data;
  std::vector<std::string> feature_names;
  std::vector<std::string> label_names;
};

// Header row required; the last column holds the label. Throws
// InvalidArgument on an empty file or a malformed row (message names the
// line number).
CsvDataset load_csv(const std::string& path);
CsvDataset parse_csv(const std::string& text);

// Writes feature columns f0..f{d-1} (or the given names) and a final `label`
// column. Values use 17 significant digits so a reload is exact.
void write_csv(const std::string& path, const models::LabeledDataset& data,
               const std::vector<std::string>& feature_names = {});
std::string format_csv(const models::LabeledDataset& data,
                       const std::vector<std::string>& feature_names = {});

}  // namespace vqfl::data
