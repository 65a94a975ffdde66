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
#ifndef TALENTSCOPE_COMMON_H_
#define TALENTSCOPE_COMMON_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace talentscope {

// Two-digit subject area: the leading two digits of a 4-digit ASJC code.
// Construct through broad_fields_of(), which applies the exclusion rules.
struct BroadField {
  int code = 0;

  constexpr auto operator<=>(const BroadField&) const = default;
};

enum class DocType : std::uint8_t { kArticle, kReview, kProceedings };

// Returns nullopt for any non-citable type ("editorial", "letter", ...).
std::optional<DocType> parse_doc_type(std::string_view name);
std::string_view doc_type_name(DocType type);

// Inclusive calendar-year interval.
struct YearRange {
  int first = 0;
  int last = 0;

  constexpr bool contains(int year) const {
    return year >= first && year <= last;
  }
  constexpr bool operator==(const YearRange&) const = default;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by ingest in fail-fast mode; carries the 1-based input line.
class MalformedRecordError : public Error {
 public:
  MalformedRecordError(std::size_t line, std::string reason);

  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace talentscope

#endif  // TALENTSCOPE_COMMON_H_
