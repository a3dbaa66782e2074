// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/data/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "vqfl/error.hpp"

namespace vqfl::data {
namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(const std::string& s, double& value) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, value);
  return first != last && res.ec == std::errc{} && res.ptr == last;
}

bool parse_label_int(const std::string& s, int& value) {
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  return !s.empty() && res.ec == std::errc{} && res.ptr == s.data() + s.size() && value >= 0;
}

}  // namespace

LabelEncoding label_encode(const std::vector<std::string>& raw) {
  LabelEncoding enc;
  std::vector<int> ints(raw.size());
  bool all_int = !raw.empty();
  for (std::size_t i = 0; i < raw.size() && all_int; ++i) all_int = parse_label_int(raw[i], ints[i]);
  if (all_int) {
    enc.labels = ints;
    int max_id = 0;
    for (int v : ints) max_id = std::max(max_id, v);
    for (int v = 0; v <= max_id; ++v) enc.names.push_back(std::to_string(v));
    return enc;
  }
  std::unordered_map<std::string, int> ids;
  enc.labels.reserve(raw.size());
  for (const std::string& r : raw) {
    auto [it, inserted] = ids.try_emplace(r, static_cast<int>(enc.names.size()));
    if (inserted) enc.names.push_back(r);
    enc.labels.push_back(it->second);
  }
  return enc;
}

CsvDataset parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) {
      header = split_fields(line);
      break;
    }
  }
  if (header.empty()) throw InvalidArgument("CSV is empty");
  if (header.size() < 2) throw InvalidArgument("CSV needs at least one feature and a label column");
  for (auto& h : header) h = trim(h);

  const std::size_t d = header.size() - 1;
  std::vector<double> values;
  std::vector<std::string> raw_labels;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != header.size()) {
      throw InvalidArgument("CSV line " + std::to_string(line_no) + ": expected " +
                            std::to_string(header.size()) + " fields, got " +
                            std::to_string(fields.size()));
    }
    for (std::size_t j = 0; j < d; ++j) {
      double v = 0.0;
      if (!parse_double(trim(fields[j]), v)) {
        throw InvalidArgument("CSV line " + std::to_string(line_no) + ": column '" + header[j] +
                              "' is not a number");
      }
      values.push_back(v);
    }
    std::string label = trim(fields[d]);
    if (label.empty()) {
      throw InvalidArgument("CSV line " + std::to_string(line_no) + ": empty label");
    }
    raw_labels.push_back(std::move(label));
  }
  if (raw_labels.empty()) throw InvalidArgument("CSV has a header but no data rows");

  LabelEncoding enc = label_encode(raw_labels);
  CsvDataset out;
  out.data = models::LabeledDataset(std::move(values), d, std::move(enc.labels));
  out.feature_names.assign(header.begin(), header.end() - 1);
  out.label_names = std::move(enc.names);
  return out;
}

CsvDataset load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open CSV file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

std::string format_csv(const models::LabeledDataset& data,
                       const std::vector<std::string>& feature_names) {
  const std::size_t d = data.num_features();
  std::string out;
  for (std::size_t j = 0; j < d; ++j) {
    out += j < feature_names.size() ? feature_names[j] : "f" + std::to_string(j);
    out += ',';
  }
  out += "label\n";
  char buf[64];
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto r = data.row(i);
    for (std::size_t j = 0; j < d; ++j) {
      const auto res = std::to_chars(buf, buf + sizeof buf, r[j], std::chars_format::general, 17);
      out.append(buf, res.ptr);
      out += ',';
    }
    out += std::to_string(data.label(i));
    out += '\n';
  }
  return out;
}

void write_csv(const std::string& path, const models::LabeledDataset& data,
               const std::vector<std::string>& feature_names) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write CSV file '" + path + "'");
  out << format_csv(data, feature_names);
}

}  // namespace vqfl::data
