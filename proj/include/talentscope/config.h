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
#ifndef TALENTSCOPE_CONFIG_H_
#define TALENTSCOPE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "talentscope/cohorts.h"
#include "talentscope/corpus.h"
#include "talentscope/quartiles.h"
#include "talentscope/synthgen.h"

namespace talentscope {

// Every knob of a pipeline run. Defaults reproduce the published
// parameterization: 1999-2020 records of the three citable types, a
// ten-year early-career window, Q1 at a median percentile of 75, 2019/2020
// Q1 flags borrowed from 2018, a 1999-2003 validation cohort, a 2007-2011
// talent cohort, top 1/5/10 percent cut points, OxQ1 for the talent export
// and post-window performance up to 2018.
struct PipelineConfig {
  std::vector<std::string> inputs;
  std::string output_dir = "talentscope_out";
  std::string input_format = "auto";  // auto | jsonl | csv

  IngestOptions ingest;
  int window_length = kDefaultWindowLength;
  double q1_threshold = kDefaultQ1Threshold;
  SubstitutionRule substitution;
  YearRange validation_range{1999, 2003};
  YearRange talent_range{2007, 2011};
  TopPercents top_percents;
  IndicatorCombination export_combination =
      IndicatorCombination::of({Indicator::kO, Indicator::kQ1});
  int end_year = 2018;

  // The only source of randomness; feeds the synthetic generator.
  std::uint64_t seed = 42;
  // When set, the input is generated instead of read from `inputs`.
  std::optional<SynthConfig> synthetic;

  // Throws Error describing the first inconsistent setting.
  void validate() const;
};

PipelineConfig paper_defaults();

// Keys are the kebab-case CLI flag names ("first-year", "q1-threshold",
// "validation-range", ...). Synthetic-generator parameters use
// "synthetic.<name>". Throws Error on unknown keys or unparsable values.
void apply_setting(PipelineConfig& config, std::string_view key,
                   std::string_view value);

// Names accepted by apply_setting(), excluding "synthetic.*".
const std::vector<std::string>& setting_keys();

// `key = value` lines; blank lines and '#' comments are ignored.
// The name "paper_defaults" denotes the built-in defaults.
void apply_config_file(PipelineConfig& config, const std::string& path_or_name);

// Ordered (key, value) echo of the analysis-relevant settings. The output
// directory is omitted so that runs into different directories compare equal.
std::vector<std::pair<std::string, std::string>> describe(
    const PipelineConfig& config);

}  // namespace talentscope

#endif  // TALENTSCOPE_CONFIG_H_
