// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/fl/metrics_io.hpp"

#include <cstdio>
#include <fstream>

#include "vqfl/error.hpp"

namespace vqfl::fl {

std::string format_metrics_csv(std::span<const RoundMetrics> rows) {
  std::string out = kMetricsHeader;
  out += '\n';
  char line[512];
  for (const RoundMetrics& m : rows) {
    std::snprintf(line, sizeof line,
                  "%d,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", m.round,
                  m.global_ft_val_acc, m.global_ft_test_acc, m.global_ft_val_loss,
                  m.pred_test_acc, m.pred_val_acc, m.pred_val_loss, m.avg_local_train_acc,
                  m.avg_local_test_acc, m.avg_local_train_loss, m.avg_local_train_time_s,
                  m.comm_time_s);
    out += line;
  }
  return out;
}

void write_metrics_csv(const std::string& path, std::span<const RoundMetrics> rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw RuntimeAbort("cannot write metrics file '" + path + "'");
  out << format_metrics_csv(rows);
}

}  // namespace vqfl::fl
