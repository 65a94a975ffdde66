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
#ifndef TALENTSCOPE_PIPELINE_H_
#define TALENTSCOPE_PIPELINE_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "talentscope/cohorts.h"
#include "talentscope/common.h"
#include "talentscope/config.h"
#include "talentscope/corpus.h"
#include "talentscope/indicators.h"
#include "talentscope/percentiles.h"
#include "talentscope/quartiles.h"
#include "talentscope/validation.h"

namespace talentscope {

enum class Stage {
  kIngest,
  kPercentiles,
  kQuartiles,
  kIndicators,
  kCohorts,
  kValidate,
  kExport,
};

std::string_view stage_name(Stage stage);

// A failure inside one stage; what() reads "<stage>: <cause>".
class StageError : public Error {
 public:
  StageError(Stage stage, const std::string& cause);
  Stage stage() const { return stage_; }

 private:
  Stage stage_;
};

// In-memory results of every stage, for callers that skip the file layer.
struct PipelineResults {
  IngestResult ingested;
  std::string input_digest;
  PercentileTable percentiles;
  std::vector<JournalYearQuartile> quartiles;  // after substitution
  std::vector<AuthorFieldIndicators> indicators;
  std::vector<std::string> validation_cohort;
  std::vector<ThresholdRow> thresholds;
  std::vector<CohortAssignment> assignments;
  std::vector<AuthorPostWindowPerformance> performances;
  ValidationSummary summary;
  std::vector<std::string> talent_cohort;
  std::vector<ThresholdRow> talent_thresholds;
  std::vector<AuthorFieldIndicators> talent_rows;
  std::map<int, std::size_t> talent_by_first_year;  // distinct authors
};

// Runs every stage up to and including `last` without touching the disk
// beyond reading inputs.
PipelineResults compute_pipeline(const PipelineConfig& config,
                                 Stage last = Stage::kExport);

// Files written by a stage, in write order.
std::vector<std::string> stage_outputs(Stage stage);

struct RunReport {
  std::filesystem::path output_dir;
  std::vector<std::string> files;  // relative names, manifest last
  std::map<std::string, std::string> digests;  // file -> sha256
};

// Full run: every stage's files plus manifest.json (config echo, input
// digest, row counts, output digests) and timings.json (wall clock per
// stage; not part of the deterministic artifact set). Files are staged in a
// scratch directory and moved into place only when every stage succeeded.
RunReport run_pipeline(const PipelineConfig& config);

// Recomputes the stages leading up to `stage` and writes only that stage's
// files. Outputs are byte-identical to the same files from run_pipeline().
RunReport run_stage(const PipelineConfig& config, Stage stage);

// Reads inputs or generates the synthetic corpus named by the config.
IngestResult load_input(const PipelineConfig& config, std::string* digest);

// author_id,field,first_paper_year,O,Q1,C for every talent assignment.
void write_talent_dataset(std::span<const AuthorFieldIndicators> rows,
                          std::ostream& out);

}  // namespace talentscope

#endif  // TALENTSCOPE_PIPELINE_H_
