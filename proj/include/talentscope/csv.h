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
#ifndef TALENTSCOPE_CSV_H_
#define TALENTSCOPE_CSV_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace talentscope::csv {

// Splits one CSV line following RFC 4180 quoting. Embedded newlines inside
// quoted cells are not supported; every record is a single line.
// Returns nullopt on an unterminated quote.
std::optional<std::vector<std::string>> split_line(std::string_view line);

// Quotes a cell when it contains a comma, quote, or line break.
std::string escape(std::string_view cell);

// Fixed-point rendering with `digits` decimals; never prints "-0.000000".
std::string fixed(double value, int digits = 6);

// fixed() for present values, empty cell otherwise.
std::string fixed_or_empty(const std::optional<double>& value, int digits = 6);

}  // namespace talentscope::csv

#endif  // TALENTSCOPE_CSV_H_
