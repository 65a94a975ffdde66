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
#include "talentscope/record_io.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <limits>

#include "json.hpp"
#include "talentscope/common.h"
#include "talentscope/csv.h"

namespace talentscope {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 8> kColumns = {
    "id",      "year",          "type",     "journal",
    "asjc",    "authors",       "corresponding", "citations"};

enum Column { kId, kYear, kType, kJournal, kAsjc, kAuthors, kCorresponding,
              kCitations };

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

template <typename Int>
bool parse_int(std::string_view text, Int& out) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::vector<std::string_view> split_list(std::string_view cell) {
  std::vector<std::string_view> items;
  if (cell.empty()) return items;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = cell.find(';', start);
    items.push_back(cell.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return items;
}

// Returns an error message, empty on success.
std::string from_json(const json& doc, InputRecord& rec) {
  if (!doc.is_object()) return "record is not a JSON object";
  for (std::size_t i = 0; i < kColumns.size(); ++i) {
    if (!doc.contains(kColumns[i])) {
      return "missing key '" + std::string(kColumns[i]) + "'";
    }
  }
  const auto& id = doc["id"];
  const auto& year = doc["year"];
  const auto& type = doc["type"];
  const auto& journal = doc["journal"];
  const auto& asjc = doc["asjc"];
  const auto& authors = doc["authors"];
  const auto& corresponding = doc["corresponding"];
  const auto& citations = doc["citations"];
  if (!id.is_string()) return "'id' must be a string";
  if (!year.is_number_integer()) return "'year' must be an integer";
  if (!type.is_string()) return "'type' must be a string";
  if (!journal.is_string()) return "'journal' must be a string";
  if (!asjc.is_array()) return "'asjc' must be an array";
  if (!authors.is_array()) return "'authors' must be an array";
  if (!corresponding.is_array()) return "'corresponding' must be an array";
  if (!citations.is_number_integer()) return "'citations' must be an integer";

  rec.id = id.get<std::string>();
  const auto year_value = year.get<std::int64_t>();
  if (year_value < std::numeric_limits<int>::min() ||
      year_value > std::numeric_limits<int>::max()) {
    return "'year' out of range";
  }
  rec.year = static_cast<int>(year_value);
  rec.type = type.get<std::string>();
  rec.journal = journal.get<std::string>();
  rec.citations = citations.get<std::int64_t>();
  rec.asjc.clear();
  for (const auto& code : asjc) {
    if (!code.is_number_integer()) return "'asjc' entries must be integers";
    const auto value = code.get<std::int64_t>();
    if (value < 0 || value > 99999) return "'asjc' entry out of range";
    rec.asjc.push_back(static_cast<int>(value));
  }
  rec.authors.clear();
  for (const auto& a : authors) {
    if (!a.is_string()) return "'authors' entries must be strings";
    rec.authors.push_back(a.get<std::string>());
  }
  rec.corresponding.clear();
  for (const auto& a : corresponding) {
    if (!a.is_string()) return "'corresponding' entries must be strings";
    rec.corresponding.push_back(a.get<std::string>());
  }
  return {};
}

std::string from_csv(const std::vector<std::string>& cells,
                     const std::vector<int>& columns, InputRecord& rec) {
  if (cells.size() != columns.size()) {
    return "expected " + std::to_string(columns.size()) + " cells, got " +
           std::to_string(cells.size());
  }
  std::array<const std::string*, kColumns.size()> by_field{};
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (columns[i] >= 0) by_field[columns[i]] = &cells[i];
  }
  rec.id = *by_field[kId];
  if (!parse_int(*by_field[kYear], rec.year)) return "'year' must be an integer";
  rec.type = *by_field[kType];
  rec.journal = *by_field[kJournal];
  if (!parse_int(*by_field[kCitations], rec.citations)) {
    return "'citations' must be an integer";
  }
  rec.asjc.clear();
  for (auto item : split_list(*by_field[kAsjc])) {
    int code = 0;
    if (!parse_int(item, code)) return "'asjc' entries must be integers";
    rec.asjc.push_back(code);
  }
  rec.authors.clear();
  for (auto item : split_list(*by_field[kAuthors])) rec.authors.emplace_back(item);
  rec.corresponding.clear();
  for (auto item : split_list(*by_field[kCorresponding])) {
    rec.corresponding.emplace_back(item);
  }
  return {};
}

void append_json_string(std::string& out, std::string_view s) {
  out.push_back('"');
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          static constexpr char kHex[] = "0123456789abcdef";
          out += "\\u00";
          out.push_back(kHex[(ch >> 4) & 0xf]);
          out.push_back(kHex[ch & 0xf]);
        } else {
          out.push_back(ch);
        }
    }
  }
  out.push_back('"');
}

std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out.push_back(';');
    out += items[i];
  }
  return out;
}

}  // namespace

InputFormat format_for_path(std::string_view path) {
  auto dot = path.rfind('.');
  if (dot != std::string_view::npos) {
    std::string ext(path.substr(dot));
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (ext == ".csv") return InputFormat::kCsv;
  }
  return InputFormat::kJsonLines;
}

RecordReader::RecordReader(std::istream& in, InputFormat format)
    : in_(in), format_(format) {}

void RecordReader::read_csv_header() {
  header_read_ = true;
  while (std::getline(in_, buffer_)) {
    ++line_no_;
    if (is_blank(buffer_)) continue;
    auto cells = csv::split_line(buffer_);
    if (!cells) throw Error("CSV header: unterminated quote");
    std::array<bool, kColumns.size()> seen{};
    csv_columns_.clear();
    for (const auto& name : *cells) {
      auto it = std::find(kColumns.begin(), kColumns.end(), name);
      int index = it == kColumns.end() ? -1
                                       : static_cast<int>(it - kColumns.begin());
      if (index >= 0) {
        if (seen[index]) throw Error("CSV header: duplicate column '" + name + "'");
        seen[index] = true;
      }
      csv_columns_.push_back(index);
    }
    for (std::size_t i = 0; i < kColumns.size(); ++i) {
      if (!seen[i]) {
        throw Error("CSV header: missing column '" + std::string(kColumns[i]) +
                    "'");
      }
    }
    return;
  }
}

bool RecordReader::next(ParsedLine& out) {
  if (format_ == InputFormat::kCsv && !header_read_) read_csv_header();
  while (std::getline(in_, buffer_)) {
    ++line_no_;
    if (is_blank(buffer_)) continue;
    out.line = line_no_;
    out.error.clear();
    InputRecord rec;
    if (format_ == InputFormat::kJsonLines) {
      json doc = json::parse(buffer_, nullptr, /*allow_exceptions=*/false);
      if (doc.is_discarded()) {
        out.error = "invalid JSON";
      } else {
        out.error = from_json(doc, rec);
      }
    } else {
      auto cells = csv::split_line(buffer_);
      if (!cells) {
        out.error = "unterminated quote";
      } else {
        out.error = from_csv(*cells, csv_columns_, rec);
      }
    }
    if (out.error.empty()) {
      out.record = std::move(rec);
    } else {
      out.record.reset();
    }
    return true;
  }
  return false;
}

std::string to_jsonl(const InputRecord& record) {
  std::string out;
  out.reserve(128);
  out += "{\"id\":";
  append_json_string(out, record.id);
  out += ",\"year\":";
  out += std::to_string(record.year);
  out += ",\"type\":";
  append_json_string(out, record.type);
  out += ",\"journal\":";
  append_json_string(out, record.journal);
  out += ",\"asjc\":[";
  for (std::size_t i = 0; i < record.asjc.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(record.asjc[i]);
  }
  out += "],\"authors\":[";
  for (std::size_t i = 0; i < record.authors.size(); ++i) {
    if (i) out.push_back(',');
    append_json_string(out, record.authors[i]);
  }
  out += "],\"corresponding\":[";
  for (std::size_t i = 0; i < record.corresponding.size(); ++i) {
    if (i) out.push_back(',');
    append_json_string(out, record.corresponding[i]);
  }
  out += "],\"citations\":";
  out += std::to_string(record.citations);
  out += "}\n";
  return out;
}

void write_jsonl(std::ostream& out, const InputRecord& record) {
  out << to_jsonl(record);
}

void write_csv_header(std::ostream& out) {
  out << "id,year,type,journal,asjc,authors,corresponding,citations\n";
}

void write_csv(std::ostream& out, const InputRecord& record) {
  std::string asjc;
  for (std::size_t i = 0; i < record.asjc.size(); ++i) {
    if (i) asjc.push_back(';');
    asjc += std::to_string(record.asjc[i]);
  }
  out << csv::escape(record.id) << ',' << record.year << ','
      << csv::escape(record.type) << ',' << csv::escape(record.journal) << ','
      << asjc << ',' << csv::escape(join_list(record.authors)) << ','
      << csv::escape(join_list(record.corresponding)) << ','
      << record.citations << '\n';
}

}  // namespace talentscope
