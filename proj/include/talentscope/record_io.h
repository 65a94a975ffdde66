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
#ifndef TALENTSCOPE_RECORD_IO_H_
#define TALENTSCOPE_RECORD_IO_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace talentscope {

// One input row as it appears on the wire, before validation and filtering.
// `type` is kept verbatim so that non-citable types can be counted as drops.
struct InputRecord {
  std::string id;
  int year = 0;
  std::string type;
  std::string journal;
  std::vector<int> asjc;
  std::vector<std::string> authors;
  std::vector<std::string> corresponding;
  std::int64_t citations = 0;

  bool operator==(const InputRecord&) const = default;
};

enum class InputFormat { kJsonLines, kCsv };

// ".csv" selects CSV, anything else JSON lines.
InputFormat format_for_path(std::string_view path);

struct ParsedLine {
  std::size_t line = 0;  // 1-based physical line number
  std::optional<InputRecord> record;
  std::string error;  // set iff !record
};

// Streams records out of a JSON-lines or CSV source. Blank lines are skipped.
// A CSV source must start with a header naming the eight record columns.
class RecordReader {
 public:
  RecordReader(std::istream& in, InputFormat format);

  // Returns false once the input is exhausted.
  bool next(ParsedLine& out);

 private:
  void read_csv_header();

  std::istream& in_;
  InputFormat format_;
  std::size_t line_no_ = 0;
  std::string buffer_;
  std::vector<int> csv_columns_;  // column slot -> field index, -1 if unused
  bool header_read_ = false;
};

// Key order: id, year, type, journal, asjc, authors, corresponding, citations.
void write_jsonl(std::ostream& out, const InputRecord& record);
std::string to_jsonl(const InputRecord& record);

void write_csv_header(std::ostream& out);
void write_csv(std::ostream& out, const InputRecord& record);

}  // namespace talentscope

#endif  // TALENTSCOPE_RECORD_IO_H_
