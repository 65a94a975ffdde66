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
#include "talentscope/pipeline.h"

#include <chrono>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "talentscope/csv.h"
#include "talentscope/digest.h"
#include "talentscope/synthgen.h"

namespace talentscope {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr char kToolName[] = "talentscope";
constexpr char kToolVersion[] = "1.0.0";
constexpr char kStagingDir[] = ".staging";

struct StageLog {
  Stage stage;
  double seconds = 0;
  std::vector<std::pair<std::string, std::size_t>> counts;
};

// Runs `body` as `stage`, timing it and tagging any failure with the stage.
template <typename Body>
void run_timed(Stage stage, std::vector<StageLog>* logs, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  StageLog log{stage, 0, {}};
  try {
    body(log.counts);
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(stage, e.what());
  }
  log.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  if (logs != nullptr) logs->push_back(std::move(log));
}

PipelineResults compute(const PipelineConfig& config, Stage last,
                        std::vector<StageLog>* logs) {
  try {
    config.validate();
  } catch (const std::exception& e) {
    throw StageError(Stage::kIngest, std::string("invalid config: ") + e.what());
  }
  PipelineResults r;
  const auto reached = [&](Stage s) { return s <= last; };

  run_timed(Stage::kIngest, logs, [&](auto& counts) {
    r.ingested = load_input(config, &r.input_digest);
    const auto& s = r.ingested.stats;
    counts = {{"read", s.read},
              {"kept", s.kept},
              {"dropped_doc_type", s.dropped_doc_type},
              {"dropped_year", s.dropped_year},
              {"dropped_malformed", s.dropped_malformed},
              {"kept_without_field", s.kept_without_field},
              {"authors", r.ingested.corpus.author_count()},
              {"journals", r.ingested.corpus.journal_count()}};
  });
  const Corpus& corpus = r.ingested.corpus;
  if (!reached(Stage::kPercentiles)) return r;

  run_timed(Stage::kPercentiles, logs, [&](auto& counts) {
    r.percentiles = compute_paper_percentiles(corpus);
    counts = {{"observations", r.percentiles.size()},
              {"field_year_groups", corpus.field_year_groups().size()}};
  });
  if (!reached(Stage::kQuartiles)) return r;

  run_timed(Stage::kQuartiles, logs, [&](auto& counts) {
    const auto raw = assign_q1(r.percentiles, corpus, config.q1_threshold);
    r.quartiles = apply_recent_year_substitution(raw, config.substitution);
    std::size_t q1 = 0, substituted = 0;
    for (const auto& q : r.quartiles) {
      q1 += q.is_q1;
      substituted += q.source_year != q.year;
    }
    counts = {{"journal_years", r.quartiles.size()},
              {"q1", q1},
              {"substituted", substituted}};
  });
  if (!reached(Stage::kIndicators)) return r;

  run_timed(Stage::kIndicators, logs, [&](auto& counts) {
    r.indicators =
        compute_window_indicators(corpus, r.quartiles, config.window_length);
    counts = {{"author_fields", r.indicators.size()}};
  });
  if (!reached(Stage::kCohorts)) return r;

  run_timed(Stage::kCohorts, logs, [&](auto& counts) {
    r.validation_cohort =
        build_cohort(corpus, config.validation_range, config.window_length);
    r.thresholds = compute_thresholds(r.validation_cohort, r.indicators,
                                      config.top_percents);
    r.assignments =
        select_all_groups(r.validation_cohort, r.indicators, r.thresholds);
    counts = {{"cohort_authors", r.validation_cohort.size()},
              {"thresholds", r.thresholds.size()},
              {"assignments", r.assignments.size()}};
  });
  if (!reached(Stage::kValidate)) return r;

  run_timed(Stage::kValidate, logs, [&](auto& counts) {
    std::set<std::string_view> assigned;
    for (const auto& a : r.assignments) assigned.insert(a.author_id);
    const std::vector<std::string> authors(assigned.begin(), assigned.end());
    r.performances = compute_post_window_performance(
        corpus, r.percentiles, authors, config.window_length, config.end_year);
    r.summary = summarize(r.assignments, r.performances);
    counts = {{"assigned_authors", authors.size()},
              {"performances", r.performances.size()}};
  });
  if (!reached(Stage::kExport)) return r;

  run_timed(Stage::kExport, logs, [&](auto& counts) {
    r.talent_cohort =
        build_cohort(corpus, config.talent_range, config.window_length);
    r.talent_thresholds = compute_thresholds(r.talent_cohort, r.indicators,
                                             config.top_percents);
    std::set<std::pair<std::string, BroadField>> talent;
    std::set<BroadField> fields;
    for (const auto& t : r.talent_thresholds) fields.insert(t.field);
    for (BroadField f : fields) {
      for (auto& a :
           select_groups(r.talent_cohort, r.indicators, r.talent_thresholds,
                         config.export_combination, f)) {
        if (a.group == Group::kTalent) talent.insert({std::move(a.author_id), f});
      }
    }
    std::set<std::string_view> seen_authors;
    for (const auto& row : r.indicators) {
      if (talent.count({row.author_id, row.field}) == 0) continue;
      r.talent_rows.push_back(row);
      if (seen_authors.insert(row.author_id).second) {
        ++r.talent_by_first_year[row.first_paper_year];
      }
    }
    counts = {{"talent_cohort_authors", r.talent_cohort.size()},
              {"talent_rows", r.talent_rows.size()},
              {"talent_authors", seen_authors.size()}};
  });
  return r;
}

std::string render(const std::function<void(std::ostream&)>& writer) {
  std::ostringstream out;
  writer(out);
  return std::move(out).str();
}

std::string stage_file(const std::string& name, const PipelineResults& r) {
  if (name == "ingest_report.csv") {
    return render([&](auto& o) { write_ingest_report(r.ingested.stats, o); });
  }
  if (name == "percentiles.csv") {
    return render([&](auto& o) { write_percentiles_csv(r.percentiles, o); });
  }
  if (name == "quartiles.csv") {
    return render([&](auto& o) { write_quartiles_csv(r.quartiles, o); });
  }
  if (name == "indicators.csv") {
    return render([&](auto& o) { write_indicators_csv(r.indicators, o); });
  }
  if (name == "thresholds.csv") {
    return render([&](auto& o) { write_thresholds_csv(r.thresholds, o); });
  }
  if (name == "cohorts.csv") {
    return render([&](auto& o) { write_assignments_csv(r.assignments, o); });
  }
  if (name == "performance.csv") {
    return render([&](auto& o) { write_performance_csv(r.performances, o); });
  }
  if (name == "report_counts.csv") {
    return render([&](auto& o) { write_report_counts(r.summary, o); });
  }
  if (name == "report_papers.csv") {
    return render([&](auto& o) { write_report_papers(r.summary, o); });
  }
  if (name == "report_percentiles.csv") {
    return render([&](auto& o) { write_report_percentiles(r.summary, o); });
  }
  if (name == "summary.txt") {
    return render([&](auto& o) { write_summary_text(r.summary, o); });
  }
  if (name == "talent_thresholds.csv") {
    return render(
        [&](auto& o) { write_thresholds_csv(r.talent_thresholds, o); });
  }
  if (name == "talent_dataset.csv") {
    return render([&](auto& o) { write_talent_dataset(r.talent_rows, o); });
  }
  if (name == "talent_counts.csv") {
    return render([&](auto& o) {
      o << "first_paper_year,n_authors\n";
      for (const auto& [year, n] : r.talent_by_first_year) {
        o << year << ',' << n << '\n';
      }
    });
  }
  throw Error("unknown output file " + name);
}

void write_file(const fs::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write failed for " + path.string());
}

Json manifest_json(const PipelineConfig& config, const PipelineResults& r,
                   const std::vector<StageLog>& logs,
                   const std::vector<std::pair<std::string, std::string>>& files,
                   const std::map<std::string, std::size_t>& sizes) {
  Json m;
  m["tool"] = kToolName;
  m["version"] = kToolVersion;
  Json cfg = Json::object();
  for (const auto& [k, v] : describe(config)) cfg[k] = v;
  m["config"] = std::move(cfg);
  Json input;
  input["kind"] = config.synthetic ? "synthetic" : "files";
  input["sha256"] = r.input_digest;
  m["input"] = std::move(input);
  Json stages = Json::array();
  for (const auto& log : logs) {
    Json s;
    s["stage"] = std::string(stage_name(log.stage));
    Json counts = Json::object();
    for (const auto& [k, v] : log.counts) counts[k] = v;
    s["rows"] = std::move(counts);
    stages.push_back(std::move(s));
  }
  m["stages"] = std::move(stages);
  Json outputs = Json::array();
  for (const auto& [name, digest] : files) {
    Json o;
    o["file"] = name;
    o["bytes"] = sizes.at(name);
    o["sha256"] = digest;
    outputs.push_back(std::move(o));
  }
  m["outputs"] = std::move(outputs);
  Json by_year = Json::object();
  for (const auto& [year, n] : r.talent_by_first_year) {
    by_year[std::to_string(year)] = n;
  }
  m["talent_authors_by_first_year"] = std::move(by_year);
  const auto ranking = rank_combinations(r.summary);
  m["best_combination"] = r.summary.at(ranking.front()).percentiles_difference
                              ? ranking.front().name()
                              : std::string();
  return m;
}

Json timings_json(const std::vector<StageLog>& logs) {
  Json t = Json::object();
  for (const auto& log : logs) t[std::string(stage_name(log.stage))] = log.seconds;
  Json out;
  out["wall_clock_seconds"] = std::move(t);
  return out;
}

// Writes `files` (name -> bytes) through a staging directory.
RunReport publish(const fs::path& out_dir,
                  const std::vector<std::pair<std::string, std::string>>& files) {
  const fs::path staging = out_dir / kStagingDir;
  RunReport report;
  report.output_dir = out_dir;
  try {
    fs::create_directories(out_dir);
    fs::remove_all(staging);
    fs::create_directories(staging);
    for (const auto& [name, bytes] : files) write_file(staging / name, bytes);
    for (const auto& [name, bytes] : files) {
      fs::rename(staging / name, out_dir / name);
      report.files.push_back(name);
      report.digests[name] = sha256_hex(bytes);
    }
    fs::remove_all(staging);
  } catch (...) {
    std::error_code ignored;
    fs::remove_all(staging, ignored);
    throw;
  }
  return report;
}

}  // namespace

std::string_view stage_name(Stage stage) {
  switch (stage) {
    case Stage::kIngest: return "ingest";
    case Stage::kPercentiles: return "percentiles";
    case Stage::kQuartiles: return "quartiles";
    case Stage::kIndicators: return "indicators";
    case Stage::kCohorts: return "cohorts";
    case Stage::kValidate: return "validate";
    case Stage::kExport: return "export";
  }
  return "unknown";
}

StageError::StageError(Stage stage, const std::string& cause)
    : Error(std::string(stage_name(stage)) + ": " + cause), stage_(stage) {}

std::vector<std::string> stage_outputs(Stage stage) {
  switch (stage) {
    case Stage::kIngest: return {"ingest_report.csv"};
    case Stage::kPercentiles: return {"percentiles.csv"};
    case Stage::kQuartiles: return {"quartiles.csv"};
    case Stage::kIndicators: return {"indicators.csv"};
    case Stage::kCohorts: return {"thresholds.csv", "cohorts.csv"};
    case Stage::kValidate:
      return {"performance.csv", "report_counts.csv", "report_papers.csv",
              "report_percentiles.csv", "summary.txt"};
    case Stage::kExport:
      return {"talent_thresholds.csv", "talent_dataset.csv",
              "talent_counts.csv"};
  }
  return {};
}

IngestResult load_input(const PipelineConfig& config, std::string* digest) {
  if (config.synthetic) {
    SynthConfig synth = *config.synthetic;
    synth.seed = config.seed;
    const auto records = generate(synth);
    if (digest != nullptr) {
      Sha256 hasher;
      for (const auto& rec : records) hasher.update(to_jsonl(rec));
      *digest = hasher.hex_digest();
    }
    return ingest(records, config.ingest);
  }
  CorpusBuilder builder(config.ingest);
  Sha256 hasher;
  for (const auto& path : config.inputs) {
    const InputFormat format =
        config.input_format == "auto"  ? format_for_path(path)
        : config.input_format == "csv" ? InputFormat::kCsv
                                       : InputFormat::kJsonLines;
    if (digest != nullptr) {
      std::ifstream raw(path, std::ios::binary);
      if (!raw) throw Error("cannot open input '" + path + "'");
      std::array<char, 1 << 16> buf;
      while (raw) {
        raw.read(buf.data(), buf.size());
        hasher.update(std::string_view(buf.data(),
                                       static_cast<std::size_t>(raw.gcount())));
      }
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open input '" + path + "'");
    try {
      RecordReader reader(in, format);
      ParsedLine parsed;
      while (reader.next(parsed)) {
        if (parsed.record) {
          builder.add(parsed.line, std::move(*parsed.record));
        } else {
          builder.add_malformed(parsed.line, std::move(parsed.error));
        }
      }
    } catch (const std::exception& e) {
      throw Error(path + ": " + e.what());
    }
  }
  if (digest != nullptr) *digest = hasher.hex_digest();
  IngestResult result;
  result.corpus = builder.finish(&result.stats);
  return result;
}

PipelineResults compute_pipeline(const PipelineConfig& config, Stage last) {
  return compute(config, last, nullptr);
}

RunReport run_pipeline(const PipelineConfig& config) {
  std::vector<StageLog> logs;
  const PipelineResults r = compute(config, Stage::kExport, &logs);
  std::vector<std::pair<std::string, std::string>> files;
  std::vector<std::pair<std::string, std::string>> digests;
  std::map<std::string, std::size_t> sizes;
  for (Stage s : {Stage::kIngest, Stage::kPercentiles, Stage::kQuartiles,
                  Stage::kIndicators, Stage::kCohorts, Stage::kValidate,
                  Stage::kExport}) {
    for (const auto& name : stage_outputs(s)) {
      std::string bytes = stage_file(name, r);
      digests.emplace_back(name, sha256_hex(bytes));
      sizes[name] = bytes.size();
      files.emplace_back(name, std::move(bytes));
    }
  }
  if (!r.ingested.stats.malformed_log.empty()) {
    std::string log;
    for (const auto& line : r.ingested.stats.malformed_log) log += line + "\n";
    digests.emplace_back("ingest_malformed.txt", sha256_hex(log));
    sizes["ingest_malformed.txt"] = log.size();
    files.emplace_back("ingest_malformed.txt", std::move(log));
  }
  files.emplace_back("timings.json", timings_json(logs).dump(2) + "\n");
  files.emplace_back(
      "manifest.json",
      manifest_json(config, r, logs, digests, sizes).dump(2) + "\n");
  return publish(config.output_dir, files);
}

RunReport run_stage(const PipelineConfig& config, Stage stage) {
  const PipelineResults r = compute(config, stage, nullptr);
  std::vector<std::pair<std::string, std::string>> files;
  for (const auto& name : stage_outputs(stage)) {
    files.emplace_back(name, stage_file(name, r));
  }
  return publish(config.output_dir, files);
}

void write_talent_dataset(std::span<const AuthorFieldIndicators> rows,
                          std::ostream& out) {
  write_indicators_csv(rows, out);
}

}  // namespace talentscope
