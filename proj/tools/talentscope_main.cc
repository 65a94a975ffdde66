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
// Command-line driver for the talent identification pipeline.
//
//   talentscope run --input corpus.jsonl --out results/
//   talentscope run --synthetic seed=42 --out results/
//   talentscope synth --synthetic n_authors=20000 --out corpus.jsonl
//   talentscope percentiles --input corpus.jsonl --out results/
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "talentscope/config.h"
#include "talentscope/corpus.h"
#include "talentscope/pipeline.h"
#include "talentscope/record_io.h"
#include "talentscope/synthgen.h"

namespace {

using talentscope::PipelineConfig;
using talentscope::Stage;

struct CommandLine {
  std::string config_file;
  std::map<std::string, std::vector<std::string>> settings;
  std::vector<std::string> synthetic;
  bool synthetic_given = false;
};

const std::map<std::string, std::string>& flag_help() {
  static const std::map<std::string, std::string> kHelp = {
      {"input", "Input file (JSON lines, or CSV by extension); repeatable"},
      {"out", "Output directory (for synth: output file)"},
      {"input-format", "auto, jsonl or csv"},
      {"first-year", "First publication year kept (default 1999)"},
      {"last-year", "Last publication year kept (default 2020)"},
      {"doc-types", "Comma-separated citable types kept"},
      {"skip-malformed", "Skip malformed lines instead of failing"},
      {"window-length", "Early-career window in years (default 10)"},
      {"q1-threshold", "Median percentile for Q1 (default 75)"},
      {"substitution-target-years", "Years whose Q1 flags are borrowed"},
      {"substitution-source-year", "Year the Q1 flags are borrowed from"},
      {"validation-range", "First-paper years of the validation cohort"},
      {"talent-range", "First-paper years of the talent cohort"},
      {"top-percents", "Talent, control-upper, control-lower percents"},
      {"export-combination", "Combination used for the talent export"},
      {"end-year", "Last year of post-window performance (default 2018)"},
      {"seed", "Seed for synthetic generation"},
  };
  return kHelp;
}

void add_common_options(CLI::App* cmd, CommandLine& cl) {
  cmd->add_option("--config", cl.config_file,
                  "key = value file, or 'paper_defaults'");
  for (const auto& key : talentscope::setting_keys()) {
    auto* opt = cmd->add_option_function<std::vector<std::string>>(
        "--" + key,
        [&cl, key](const std::vector<std::string>& values) {
          auto& slot = cl.settings[key];
          slot.insert(slot.end(), values.begin(), values.end());
        },
        flag_help().at(key));
    if (key != "input") opt->expected(1);
  }
  cmd->add_option("--synthetic", cl.synthetic,
                  "Generate the input; optional name=value generator "
                  "parameters")
      ->expected(0, -1)
      ->each([&cl](const std::string&) { cl.synthetic_given = true; })
      ->trigger_on_parse();
}

PipelineConfig build_config(const CommandLine& cl, CLI::App* cmd) {
  PipelineConfig config;
  if (!cl.config_file.empty()) {
    talentscope::apply_config_file(config, cl.config_file);
  }
  for (const auto& key : talentscope::setting_keys()) {
    auto it = cl.settings.find(key);
    if (it == cl.settings.end()) continue;
    for (const auto& value : it->second) {
      talentscope::apply_setting(config, key, value);
    }
  }
  if (cl.synthetic_given || cmd->count("--synthetic") > 0) {
    if (!config.synthetic) config.synthetic.emplace();
    for (const auto& kv : cl.synthetic) {
      if (kv.empty()) continue;
      const auto eq = kv.find('=');
      if (eq == std::string::npos) {
        throw talentscope::Error("--synthetic expects name=value, got '" + kv +
                                 "'");
      }
      talentscope::apply_setting(config, "synthetic." + kv.substr(0, eq),
                                 kv.substr(eq + 1));
    }
  }
  return config;
}

int run_synth(const PipelineConfig& config) {
  talentscope::SynthConfig synth =
      config.synthetic.value_or(talentscope::SynthConfig{});
  synth.seed = config.seed;
  const auto& path = config.output_dir;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw talentscope::Error("cannot write " + path);
  const auto records = talentscope::generate(synth);
  if (talentscope::format_for_path(path) == talentscope::InputFormat::kCsv) {
    talentscope::write_csv_header(out);
    for (const auto& rec : records) talentscope::write_csv(out, rec);
  } else {
    for (const auto& rec : records) talentscope::write_jsonl(out, rec);
  }
  std::cout << "wrote " << records.size() << " records to " << path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Identify early-career scientific talent from publication "
               "records"};
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
    std::optional<Stage> stage;  // nullopt: run or synth
  };
  const std::vector<Command> commands = {
      {"ingest", "Filter and index records; write ingest_report.csv",
       Stage::kIngest},
      {"percentiles", "Write field/year Hazen percentiles", Stage::kPercentiles},
      {"quartiles", "Write journal-year Q1 assignments", Stage::kQuartiles},
      {"indicators", "Write early-career O/Q1/C indicators",
       Stage::kIndicators},
      {"cohorts", "Write thresholds and talent/control groups",
       Stage::kCohorts},
      {"validate", "Write post-window performance reports", Stage::kValidate},
      {"export", "Write the talent dataset", Stage::kExport},
      {"run", "Run every stage and write a manifest", std::nullopt},
      {"synth", "Write a synthetic corpus to --out", std::nullopt},
  };

  CommandLine cl;
  std::vector<CLI::App*> subcommands;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_common_options(sub, cl);
    subcommands.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  for (std::size_t i = 0; i < commands.size(); ++i) {
    if (!subcommands[i]->parsed()) continue;
    const auto& c = commands[i];
    std::string stage_tag = c.stage ? std::string(talentscope::stage_name(*c.stage))
                                    : std::string(c.name);
    try {
      PipelineConfig config = build_config(cl, subcommands[i]);
      if (std::string(c.name) == "synth") return run_synth(config);
      const auto report = c.stage ? talentscope::run_stage(config, *c.stage)
                                  : talentscope::run_pipeline(config);
      for (const auto& file : report.files) {
        std::cout << (report.output_dir / file).string() << '\n';
      }
      return 0;
    } catch (const talentscope::StageError& e) {
      std::cerr << "error [" << talentscope::stage_name(e.stage())
                << "]: " << e.what() << '\n';
      return 1;
    } catch (const std::exception& e) {
      std::cerr << "error [" << stage_tag << "]: " << e.what() << '\n';
      return 1;
    }
  }
  return 1;
}
