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

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "talentscope/config.h"
#include "talentscope/digest.h"
#include "test_support.h"

namespace talentscope {
namespace {

namespace fs = std::filesystem;
using testing::make_record;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("talentscope_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ignored;
    fs::remove_all(path_, ignored);
  }
  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command =
      std::string("\"") + TALENTSCOPE_CLI_PATH + "\" " + args + " 2>&1";
  CliResult result;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.output.append(buf, n);
  }
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

PipelineConfig synthetic_config(const fs::path& out, int n_authors = 700) {
  PipelineConfig config;
  config.output_dir = out.string();
  config.synthetic.emplace();
  config.synthetic->n_authors = n_authors;
  config.seed = 5;
  return config;
}

std::vector<std::string> all_outputs() {
  std::vector<std::string> names;
  for (Stage s : {Stage::kIngest, Stage::kPercentiles, Stage::kQuartiles,
                  Stage::kIndicators, Stage::kCohorts, Stage::kValidate,
                  Stage::kExport}) {
    for (auto& n : stage_outputs(s)) names.push_back(n);
  }
  return names;
}

TEST(Pipeline, RunsAreByteIdentical) {
  TempDir a;
  TempDir b;
  const auto ra = run_pipeline(synthetic_config(a.path()));
  const auto rb = run_pipeline(synthetic_config(b.path()));
  ASSERT_EQ(ra.files, rb.files);
  for (const auto& name : ra.files) {
    if (name == "timings.json") continue;
    EXPECT_EQ(ra.digests.at(name), rb.digests.at(name)) << name;
    EXPECT_EQ(read_file(a / name), read_file(b / name)) << name;
  }
  EXPECT_EQ(read_file(a / "manifest.json"), read_file(b / "manifest.json"));
  EXPECT_TRUE(fs::exists(a / "timings.json"));
  EXPECT_FALSE(fs::exists(a / ".staging"));
}

TEST(Pipeline, StageCommandsMatchRun) {
  TempDir full;
  TempDir staged;
  run_pipeline(synthetic_config(full.path()));
  const auto config = synthetic_config(staged.path());
  for (Stage s : {Stage::kIngest, Stage::kPercentiles, Stage::kQuartiles,
                  Stage::kIndicators, Stage::kCohorts, Stage::kValidate,
                  Stage::kExport}) {
    const auto report = run_stage(config, s);
    EXPECT_EQ(report.files, stage_outputs(s));
  }
  for (const auto& name : all_outputs()) {
    ASSERT_TRUE(fs::exists(staged / name)) << name;
    EXPECT_EQ(read_file(staged / name), read_file(full / name)) << name;
  }
}

TEST(Pipeline, ManifestListsEveryOutput) {
  TempDir dir;
  const auto report = run_pipeline(synthetic_config(dir.path()));
  const auto manifest = nlohmann::json::parse(read_file(dir / "manifest.json"));
  std::map<std::string, std::string> listed;
  for (const auto& entry : manifest.at("outputs")) {
    const std::string file = entry.at("file");
    listed[file] = entry.at("sha256");
    EXPECT_EQ(entry.at("bytes").get<std::uintmax_t>(),
              fs::file_size(dir / file));
    EXPECT_EQ(sha256_file(dir / file), listed[file]) << file;
  }
  for (const auto& name : all_outputs()) EXPECT_EQ(listed.count(name), 1u);
  EXPECT_EQ(listed.count("timings.json"), 0u);
  EXPECT_EQ(manifest.at("stages").size(), 7u);
  EXPECT_EQ(manifest.at("input").at("kind"), "synthetic");
  EXPECT_EQ(manifest.at("input").at("sha256").get<std::string>().size(), 64u);
  EXPECT_TRUE(manifest.contains("talent_authors_by_first_year"));
  EXPECT_TRUE(manifest.contains("best_combination"));
  EXPECT_EQ(report.files.back(), "manifest.json");
}

TEST(Pipeline, CorrelatedAbilityShowsGapForOxQ1) {
  PipelineConfig config;
  config.synthetic.emplace();
  config.synthetic->ability_correlation = 0.8;
  config.seed = 3;
  const auto r = compute_pipeline(config, Stage::kValidate);
  const auto& row =
      r.summary.at(IndicatorCombination::of({Indicator::kO, Indicator::kQ1}));
  ASSERT_TRUE(row.percentiles_difference);
  EXPECT_GT(row.percentiles_difference->median, 0.0);
}

TEST(Pipeline, FailedRunLeavesNoFiles) {
  TempDir dir;
  auto config = synthetic_config(dir / "out", 200);
  config.talent_range = {2015, 2019};
  try {
    run_pipeline(config);
    FAIL() << "expected a stage error";
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), Stage::kExport);
  }
  EXPECT_TRUE(!fs::exists(dir / "out") || fs::is_empty(dir / "out"));
}

TEST(Config, PaperDefaultsEcho) {
  PipelineConfig config;
  config.window_length = 3;
  apply_config_file(config, "paper_defaults");
  std::map<std::string, std::string> echo;
  for (const auto& [k, v] : describe(config)) echo[k] = v;
  EXPECT_EQ(echo.at("window-length"), "10");
  EXPECT_EQ(echo.at("q1-threshold"), "75");
  EXPECT_EQ(echo.at("first-year"), "1999");
  EXPECT_EQ(echo.at("last-year"), "2020");
  EXPECT_EQ(echo.at("validation-range"), "1999-2003");
  EXPECT_EQ(echo.at("talent-range"), "2007-2011");
  EXPECT_EQ(echo.at("top-percents"), "1,5,10");
  EXPECT_EQ(echo.at("export-combination"), "OxQ1");
  EXPECT_EQ(echo.at("substitution-target-years"), "2019,2020");
  EXPECT_EQ(echo.at("substitution-source-year"), "2018");
  EXPECT_EQ(echo.at("end-year"), "2018");
}

TEST(Config, FileAndSettings) {
  TempDir dir;
  {
    std::ofstream f(dir / "cfg.txt");
    f << "# comment\n\nwindow-length = 8\nq1-threshold=70\n"
         "validation-range = 2000-2004\nsynthetic.n_authors = 99\n";
  }
  PipelineConfig config;
  apply_config_file(config, (dir / "cfg.txt").string());
  EXPECT_EQ(config.window_length, 8);
  EXPECT_EQ(config.q1_threshold, 70.0);
  EXPECT_EQ(config.validation_range, (YearRange{2000, 2004}));
  ASSERT_TRUE(config.synthetic);
  EXPECT_EQ(config.synthetic->n_authors, 99);
  EXPECT_THROW(apply_setting(config, "no-such-key", "1"), Error);
  EXPECT_THROW(apply_setting(config, "window-length", "ten"), Error);
  EXPECT_THROW(apply_setting(config, "export-combination", "QQ"), Error);
  EXPECT_THROW(apply_config_file(config, (dir / "missing.txt").string()),
               Error);
}

std::vector<InputRecord> fixture_records() {
  SynthConfig synth;
  synth.n_authors = 400;
  synth.seed = 8;
  return generate(synth);
}

fs::path write_fixture(const TempDir& dir, const std::string& name) {
  const auto path = dir / name;
  std::ofstream out(path);
  const auto records = fixture_records();
  if (format_for_path(name) == InputFormat::kCsv) {
    write_csv_header(out);
    for (const auto& r : records) write_csv(out, r);
  } else {
    for (const auto& r : records) write_jsonl(out, r);
  }
  return path;
}

TEST(Cli, RunWithPaperDefaults) {
  TempDir dir;
  const auto input = write_fixture(dir, "corpus.jsonl");
  const auto res = run_cli("run --config paper_defaults --input " +
                           input.string() + " --out " + (dir / "out").string());
  ASSERT_EQ(res.exit_code, 0) << res.output;
  const auto manifest =
      nlohmann::json::parse(read_file(dir / "out" / "manifest.json"));
  EXPECT_EQ(manifest.at("config").at("window-length"), "10");
  EXPECT_EQ(manifest.at("config").at("q1-threshold"), "75");
  EXPECT_EQ(manifest.at("input").at("kind"), "files");
  EXPECT_EQ(manifest.at("input").at("sha256"), sha256_file(input));
}

TEST(Cli, CsvInputMatchesJsonLines) {
  TempDir dir;
  const auto jsonl = write_fixture(dir, "corpus.jsonl");
  const auto csv = write_fixture(dir, "corpus.csv");
  ASSERT_EQ(run_cli("run --input " + jsonl.string() + " --out " +
                    (dir / "a").string())
                .exit_code,
            0);
  ASSERT_EQ(
      run_cli("run --input " + csv.string() + " --out " + (dir / "b").string())
          .exit_code,
      0);
  for (const auto& name : all_outputs()) {
    EXPECT_EQ(read_file(dir / "a" / name), read_file(dir / "b" / name)) << name;
  }
}

TEST(Cli, SplitInputsMatchSingleFile) {
  TempDir dir;
  const auto records = fixture_records();
  {
    std::ofstream whole(dir / "all.jsonl");
    std::ofstream first(dir / "p1.jsonl");
    std::ofstream second(dir / "p2.jsonl");
    for (std::size_t i = 0; i < records.size(); ++i) {
      write_jsonl(whole, records[i]);
      write_jsonl(i < records.size() / 2 ? first : second, records[i]);
    }
  }
  ASSERT_EQ(run_cli("percentiles --input " + (dir / "all.jsonl").string() +
                    " --out " + (dir / "a").string())
                .exit_code,
            0);
  const auto res = run_cli(
      "percentiles --input " + (dir / "p1.jsonl").string() + " --input " +
      (dir / "p2.jsonl").string() + " --out " + (dir / "b").string());
  ASSERT_EQ(res.exit_code, 0) << res.output;
  EXPECT_EQ(read_file(dir / "a" / "percentiles.csv"),
            read_file(dir / "b" / "percentiles.csv"));
  EXPECT_FALSE(fs::exists(dir / "b" / "quartiles.csv"));
}

TEST(Cli, SynthWritesCorpus) {
  TempDir dir;
  const auto res = run_cli("synth --synthetic n_authors=50 seed=4 --out " +
                           (dir / "s.jsonl").string());
  ASSERT_EQ(res.exit_code, 0) << res.output;
  SynthConfig synth;
  synth.n_authors = 50;
  synth.seed = 4;
  std::ostringstream expected;
  write_synthetic(synth, expected);
  EXPECT_EQ(read_file(dir / "s.jsonl"), expected.str());
}

TEST(Cli, StageTaggedErrors) {
  TempDir dir;
  auto res = run_cli("run --input " + (dir / "missing.jsonl").string() +
                     " --out " + (dir / "out").string());
  EXPECT_NE(res.exit_code, 0);
  EXPECT_NE(res.output.find("error [ingest]"), std::string::npos) << res.output;

  {
    std::ofstream bad(dir / "bad.jsonl");
    write_jsonl(bad, make_record("p1", 2001, "j", {1305}, {"a"}, {}, 1));
    bad << "{\"id\":\"p2\"}\n";
  }
  res = run_cli("ingest --input " + (dir / "bad.jsonl").string() + " --out " +
                (dir / "out").string());
  EXPECT_NE(res.exit_code, 0);
  EXPECT_NE(res.output.find("error [ingest]"), std::string::npos);
  EXPECT_NE(res.output.find("line 2"), std::string::npos) << res.output;
  EXPECT_FALSE(fs::exists(dir / "out" / "ingest_report.csv"));

  res = run_cli("ingest --skip-malformed true --input " +
                (dir / "bad.jsonl").string() + " --out " +
                (dir / "out").string());
  EXPECT_EQ(res.exit_code, 0) << res.output;
  EXPECT_NE(read_file(dir / "out" / "ingest_report.csv").find("malformed,1"),
            std::string::npos);

  res =
      run_cli("run --synthetic n_authors=100 --talent-range 2015-2019 --out " +
              (dir / "t").string());
  EXPECT_NE(res.exit_code, 0);
  EXPECT_NE(res.output.find("error [export]"), std::string::npos) << res.output;

  res = run_cli("run --window-length zero --synthetic --out " +
                (dir / "t").string());
  EXPECT_NE(res.exit_code, 0);
  EXPECT_NE(res.output.find("error"), std::string::npos);
}

TEST(Cli, EmptyTalentSetGivesHeaderOnlyExport) {
  TempDir dir;
  {
    std::ofstream f(dir / "tiny.jsonl");
    write_jsonl(f, make_record("p1", 2000, "j", {1305}, {"a"}, {"a"}, 3));
    write_jsonl(f, make_record("p2", 2001, "j", {1305}, {"b"}, {"b"}, 1));
    write_jsonl(f, make_record("p3", 2012, "j", {1305}, {"a"}, {}, 2));
  }
  const auto res = run_cli("export --input " + (dir / "tiny.jsonl").string() +
                           " --out " + (dir / "out").string());
  ASSERT_EQ(res.exit_code, 0) << res.output;
  EXPECT_EQ(read_file(dir / "out" / "talent_dataset.csv"),
            "author_id,field,first_paper_year,O,Q1,C\n");
}

TEST(TalentExport, OneRowPerField) {
  std::vector<AuthorFieldIndicators> rows = {
      {"a", BroadField{13}, 2008, 3, 1, 1},
      {"a", BroadField{16}, 2008, 2, 2, 0}};
  std::ostringstream out;
  write_talent_dataset(rows, out);
  EXPECT_EQ(out.str(),
            "author_id,field,first_paper_year,O,Q1,C\n"
            "a,13,2008,3.000000,1.000000,1.000000\n"
            "a,16,2008,2.000000,2.000000,0.000000\n");
}

}  // namespace
}  // namespace talentscope
