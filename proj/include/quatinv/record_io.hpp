// Copyright 2026 The Quatinv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUATINV_RECORD_IO_HPP_
#define QUATINV_RECORD_IO_HPP_

#include <charconv>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quatinv {

/// Shortest decimal representation that round-trips the binary64 value.
/// Negative zero prints as 0; sign flips produce it freely and it would
/// only add noise to diffs.
inline std::string format_double(double value) {
  if (value == 0.0) value = 0.0;
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

/// Comma-joined row of round-trip formatted values.
inline std::string format_row(const std::vector<double>& values) {
  std::string row;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) row += ',';
    row += format_double(values[i]);
  }
  return row;
}

inline std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

/// Lines that carry no record: empty, whitespace only, or '#' comments.
inline bool is_comment_or_blank(std::string_view line) {
  const std::string_view body = trim(line);
  return body.empty() || body.front() == '#';
}

/// Parses one finite double occupying the whole field. Rejects nan/inf and
/// trailing garbage.
inline std::optional<double> parse_double(std::string_view field) {
  const std::string_view body = trim(field);
  if (body.empty()) return std::nullopt;
  double value = 0.0;
  const char* begin = body.data();
  const char* end = begin + body.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc() || result.ptr != end) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

/// Splits a comma-separated line into exactly expected_count finite doubles;
/// nullopt on any malformed field or a count mismatch.
inline std::optional<std::vector<double>> parse_csv_doubles(
    std::string_view line, std::size_t expected_count) {
  std::vector<double> values;
  values.reserve(expected_count);
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    const std::string_view field =
        comma == std::string_view::npos
            ? line.substr(start)
            : line.substr(start, comma - start);
    const std::optional<double> value = parse_double(field);
    if (!value.has_value()) return std::nullopt;
    values.push_back(*value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (values.size() != expected_count) return std::nullopt;
  return values;
}

}  // namespace quatinv

#endif  // QUATINV_RECORD_IO_HPP_
