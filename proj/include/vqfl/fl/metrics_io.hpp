// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>

#include "vqfl/fl/orchestrator.hpp"

namespace vqfl::fl {

inline constexpr const char* kMetricsHeader =
    "round,global_ft_val_acc,global_ft_test_acc,global_ft_val_loss,pred_test_acc,"
    "pred_val_acc,pred_val_loss,avg_local_train_acc,avg_local_test_acc,"
    "avg_local_train_loss,avg_local_train_time_s,comm_time_s";

// Header plus one row per round, floats with 6 decimals.
std::string format_metrics_csv(std::span<const RoundMetrics> rows);
void write_metrics_csv(const std::string& path, std::span<const RoundMetrics> rows);

}  // namespace vqfl::fl
