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
#ifndef TALENTSCOPE_QUARTILES_H_
#define TALENTSCOPE_QUARTILES_H_

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "talentscope/corpus.h"
#include "talentscope/percentiles.h"

namespace talentscope {

inline constexpr double kDefaultQ1Threshold = 75.0;

struct JournalYearQuartile {
  std::string journal_id;
  int year = 0;
  std::optional<double> median_percentile;
  bool is_q1 = false;
  // Year whose Q1 flag this entry carries; equals `year` unless substituted.
  int source_year = 0;

  bool operator==(const JournalYearQuartile&) const = default;
};

// One journal-year from its pooled percentile observations (reordered).
// Q1 iff the median is >= threshold. Throws on an empty sample.
JournalYearQuartile classify_journal_year(std::string journal_id, int year,
                                          std::span<double> observations,
                                          double q1_threshold =
                                              kDefaultQ1Threshold);

// Median over every (paper, field) observation of a journal-year, pooled
// across fields; Q1 iff median >= threshold. Journal-years without any
// eligible observation get no entry. Sorted by (journal_id, year).
std::vector<JournalYearQuartile> assign_q1(
    const PercentileTable& percentiles, const Corpus& corpus,
    double q1_threshold = kDefaultQ1Threshold);

// Recent publication years have too short a citation window, so their Q1
// flags are borrowed from an earlier year of the same journal.
struct SubstitutionRule {
  std::vector<int> target_years{2019, 2020};
  int source_year = 2018;
};

// For each journal with an entry in rule.source_year, its target-year
// entries take that entry's is_q1 flag and record the source year. Journals
// without a source-year entry keep their own assignment. Only is_q1 and
// source_year change; every other entry is returned untouched. Idempotent.
std::vector<JournalYearQuartile> apply_recent_year_substitution(
    std::span<const JournalYearQuartile> quartiles,
    const SubstitutionRule& rule = {});

// journal_id,year,median_percentile,is_q1,source_year
void write_quartiles_csv(std::span<const JournalYearQuartile> quartiles,
                         std::ostream& out);

}  // namespace talentscope

#endif  // TALENTSCOPE_QUARTILES_H_
