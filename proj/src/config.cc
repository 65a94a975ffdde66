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
#include "talentscope/config.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>

#include "talentscope/common.h"

namespace talentscope {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value,
                            std::string_view expected) {
  throw Error("setting '" + std::string(key) + "': cannot parse '" +
              std::string(value) + "' as " + std::string(expected));
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  text = trim(text);
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    bad_value(key, text, std::is_integral_v<T> ? "an integer" : "a number");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

YearRange parse_range(std::string_view key, std::string_view text) {
  for (char sep : {',', ':', '-'}) {
    auto parts = split(text, sep);
    if (parts.size() == 2) {
      return {parse_number<int>(key, parts[0]), parse_number<int>(key, parts[1])};
    }
  }
  bad_value(key, text, "a year range like 1999-2003");
}

bool parse_bool(std::string_view key, std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  bad_value(key, text, "a boolean");
}

std::string render_double(double v) {
  std::array<char, 32> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

std::string render_range(YearRange r) {
  return std::to_string(r.first) + "-" + std::to_string(r.last);
}

}  // namespace

const std::vector<std::string>& setting_keys() {
  static const std::vector<std::string> kKeys = {
      "input",
      "out",
      "input-format",
      "first-year",
      "last-year",
      "doc-types",
      "skip-malformed",
      "window-length",
      "q1-threshold",
      "substitution-target-years",
      "substitution-source-year",
      "validation-range",
      "talent-range",
      "top-percents",
      "export-combination",
      "end-year",
      "seed",
  };
  return kKeys;
}

PipelineConfig paper_defaults() { return PipelineConfig{}; }

void apply_setting(PipelineConfig& config, std::string_view key,
                   std::string_view value) {
  key = trim(key);
  if (key.starts_with("synthetic.")) {
    if (!config.synthetic) config.synthetic.emplace();
    const auto name = key.substr(std::string_view("synthetic.").size());
    if (name == "seed") {
      config.seed = parse_number<std::uint64_t>(key, value);
    } else {
      config.synthetic->set(name, trim(value));
    }
    return;
  }
  if (key == "synthetic") {
    if (parse_bool(key, value)) {
      if (!config.synthetic) config.synthetic.emplace();
    } else {
      config.synthetic.reset();
    }
  } else if (key == "input") {
    config.inputs.emplace_back(trim(value));
  } else if (key == "out") {
    config.output_dir = std::string(trim(value));
  } else if (key == "input-format") {
    config.input_format = std::string(trim(value));
  } else if (key == "first-year") {
    config.ingest.years.first = parse_number<int>(key, value);
  } else if (key == "last-year") {
    config.ingest.years.last = parse_number<int>(key, value);
  } else if (key == "doc-types") {
    config.ingest.doc_types.clear();
    for (auto name : split(value, ',')) {
      auto type = parse_doc_type(name);
      if (!type) bad_value(key, name, "article, review or proceedings");
      config.ingest.doc_types.push_back(*type);
    }
  } else if (key == "skip-malformed") {
    config.ingest.skip_malformed = parse_bool(key, value);
  } else if (key == "window-length") {
    config.window_length = parse_number<int>(key, value);
  } else if (key == "q1-threshold") {
    config.q1_threshold = parse_number<double>(key, value);
  } else if (key == "substitution-target-years") {
    config.substitution.target_years.clear();
    for (auto y : split(value, ',')) {
      config.substitution.target_years.push_back(parse_number<int>(key, y));
    }
  } else if (key == "substitution-source-year") {
    config.substitution.source_year = parse_number<int>(key, value);
  } else if (key == "validation-range") {
    config.validation_range = parse_range(key, value);
  } else if (key == "talent-range") {
    config.talent_range = parse_range(key, value);
  } else if (key == "top-percents") {
    auto parts = split(value, ',');
    if (parts.size() != 3) bad_value(key, value, "three percents like 1,5,10");
    config.top_percents = {parse_number<double>(key, parts[0]),
                           parse_number<double>(key, parts[1]),
                           parse_number<double>(key, parts[2])};
  } else if (key == "export-combination") {
    auto combination = IndicatorCombination::parse(trim(value));
    if (!combination) bad_value(key, value, "an indicator combination");
    config.export_combination = *combination;
  } else if (key == "end-year") {
    config.end_year = parse_number<int>(key, value);
  } else if (key == "seed") {
    config.seed = parse_number<std::uint64_t>(key, value);
  } else {
    throw Error("unknown setting '" + std::string(key) + "'");
  }
}

void apply_config_file(PipelineConfig& config, const std::string& path_or_name) {
  if (path_or_name == "paper_defaults") {
    PipelineConfig defaults = paper_defaults();
    defaults.inputs = std::move(config.inputs);
    defaults.output_dir = std::move(config.output_dir);
    defaults.input_format = std::move(config.input_format);
    defaults.synthetic = std::move(config.synthetic);
    defaults.seed = config.seed;
    config = std::move(defaults);
    return;
  }
  std::ifstream in(path_or_name);
  if (!in) throw Error("cannot open config file '" + path_or_name + "'");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw Error(path_or_name + ":" + std::to_string(line_no) +
                  ": expected key = value");
    }
    apply_setting(config, view.substr(0, eq), view.substr(eq + 1));
  }
}

void PipelineConfig::validate() const {
  if (ingest.years.first > ingest.years.last) {
    throw Error("first-year must not exceed last-year");
  }
  if (ingest.doc_types.empty()) throw Error("doc-types must not be empty");
  if (window_length < 1) throw Error("window-length must be positive");
  if (!(q1_threshold >= 0 && q1_threshold <= 100)) {
    throw Error("q1-threshold must lie in [0, 100]");
  }
  top_percents.validate();
  if (validation_range.first > validation_range.last ||
      talent_range.first > talent_range.last) {
    throw Error("cohort ranges must be ordered first-last");
  }
  if (!ingest.years.contains(end_year)) {
    throw Error("end-year must lie within [first-year, last-year]");
  }
  if (input_format != "auto" && input_format != "jsonl" &&
      input_format != "csv") {
    throw Error("input-format must be auto, jsonl or csv");
  }
  if (!synthetic && inputs.empty()) {
    throw Error("no input given (use --input or --synthetic)");
  }
  if (synthetic) synthetic->validate();
}

std::vector<std::pair<std::string, std::string>> describe(
    const PipelineConfig& config) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string inputs;
  for (const auto& in : config.inputs) {
    if (!inputs.empty()) inputs += ',';
    inputs += in;
  }
  std::string doc_types;
  for (auto t : config.ingest.doc_types) {
    if (!doc_types.empty()) doc_types += ',';
    doc_types += doc_type_name(t);
  }
  std::string targets;
  for (int y : config.substitution.target_years) {
    if (!targets.empty()) targets += ',';
    targets += std::to_string(y);
  }
  const auto& p = config.top_percents;
  out = {
      {"input", inputs},
      {"input-format", config.input_format},
      {"first-year", std::to_string(config.ingest.years.first)},
      {"last-year", std::to_string(config.ingest.years.last)},
      {"doc-types", doc_types},
      {"skip-malformed", config.ingest.skip_malformed ? "true" : "false"},
      {"window-length", std::to_string(config.window_length)},
      {"q1-threshold", render_double(config.q1_threshold)},
      {"substitution-target-years", targets},
      {"substitution-source-year",
       std::to_string(config.substitution.source_year)},
      {"validation-range", render_range(config.validation_range)},
      {"talent-range", render_range(config.talent_range)},
      {"top-percents", render_double(p.talent) + "," +
                           render_double(p.control_upper) + "," +
                           render_double(p.control_lower)},
      {"export-combination", config.export_combination.name()},
      {"end-year", std::to_string(config.end_year)},
      {"seed", std::to_string(config.seed)},
  };
  if (config.synthetic) {
    for (auto& [k, v] : config.synthetic->to_key_values()) {
      if (k == "seed") continue;
      out.emplace_back("synthetic." + k, v);
    }
  }
  return out;
}

}  // namespace talentscope
