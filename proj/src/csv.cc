// Copyright 2026 The Talentscope Authors
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
//
#include "talentscope/csv.h"

#include <array>
#include <charconv>
#include <cmath>

namespace talentscope::csv {

std::optional<std::vector<std::string>> split_line(std::string_view line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (in_quotes) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        cell.push_back(ch);
      }
      continue;
    }
    if (ch == ',') {
      cells.push_back(std::move(cell));
      cell.clear();
      quoted = false;
    } else if (ch == '"' && cell.empty() && !quoted) {
      in_quotes = true;
      quoted = true;
    } else if (ch != '\r') {
      cell.push_back(ch);
    }
  }
  if (in_quotes) return std::nullopt;
  cells.push_back(std::move(cell));
  return cells;
}

std::string escape(std::string_view cell) {
  if (cell.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(cell);
  }
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

std::string fixed(double value, int digits) {
  std::array<char, 64> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, digits);
  if (ec != std::errc()) return std::isnan(value) ? "nan" : "inf";
  std::string out(buf.data(), end);
  if (out.front() == '-' &&
      out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

std::string fixed_or_empty(const std::optional<double>& value, int digits) {
  return value ? fixed(*value, digits) : std::string();
}

}  // namespace talentscope::csv
