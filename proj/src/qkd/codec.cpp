// Copyright 2026 The vqfl Authors
// SPDX-License-Identifier: Apache-2.0

#include "vqfl/qkd/codec.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "vqfl/error.hpp"

namespace vqfl::qkd {

std::vector<std::uint8_t> serialize_params(std::span<const double> params, int decimals) {
  if (decimals < 1 || decimals > 17) {
    throw InvalidArgument("serialization decimals must lie in [1, 17]");
  }
  std::vector<std::uint8_t> out;
  std::array<char, 400> buf{};
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!std::isfinite(params[i])) throw InvalidArgument("cannot serialize a non-finite parameter");
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), params[i],
                                   std::chars_format::fixed, decimals);
    if (res.ec != std::errc{}) throw InvalidArgument("parameter too large to serialize");
    if (i > 0) out.push_back(',');
    out.insert(out.end(), buf.data(), res.ptr);
  }
  return out;
}

ParamVector deserialize_params(std::span<const std::uint8_t> bytes) {
  ParamVector out;
  if (bytes.empty()) return out;
  std::string text(bytes.begin(), bytes.end());
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    const char* first = text.data() + start;
    const char* last = text.data() + end;
    for (const char* p = first; p != last; ++p) {
      const char c = *p;
      const bool ok = (c >= '0' && c <= '9') || c == '.' || (c == '-' && p == first);
      if (!ok) throw InvalidArgument("malformed parameter payload at byte " +
                                     std::to_string(p - text.data()));
    }
    double value = 0.0;
    const auto res = std::from_chars(first, last, value, std::chars_format::fixed);
    if (first == last || res.ec != std::errc{} || res.ptr != last) {
      throw InvalidArgument("malformed parameter payload near byte " + std::to_string(start));
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace vqfl::qkd
