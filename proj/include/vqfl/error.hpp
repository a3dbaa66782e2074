// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace vqfl {

// Malformed input to an operation: bad indices, mismatched lengths, values out
// of range. Configuration validation also raises this (CLI exit code 2).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Configuration problem tied to a named field.
class ConfigError : public InvalidArgument {
 public:
  ConfigError(std::string field, const std::string& message)
      : InvalidArgument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// A protocol step failed at runtime and the run cannot continue
// (CLI exit code 3).
class RuntimeAbort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Not enough sifted key bits survived to cover a payload.
class KeyShortfall : public RuntimeAbort {
 public:
  using RuntimeAbort::RuntimeAbort;
};

}  // namespace vqfl
