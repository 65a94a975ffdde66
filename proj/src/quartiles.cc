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
#include "talentscope/quartiles.h"

#include <algorithm>
#include <map>

#include "talentscope/csv.h"
#include "talentscope/stats.h"

namespace talentscope {

JournalYearQuartile classify_journal_year(std::string journal_id, int year,
                                          std::span<double> observations,
                                          double q1_threshold) {
  const double med = median_inplace(observations);
  return JournalYearQuartile{std::move(journal_id), year, med,
                             med >= q1_threshold, year};
}

std::vector<JournalYearQuartile> assign_q1(const PercentileTable& percentiles,
                                           const Corpus& corpus,
                                           double q1_threshold) {
  std::vector<JournalYearQuartile> out;
  std::vector<double> observations;
  for (const auto& group : corpus.journal_year_groups()) {
    observations.clear();
    for (auto r : group.records) {
      const auto pct = percentiles.of_record(r);
      observations.insert(observations.end(), pct.begin(), pct.end());
    }
    if (observations.empty()) continue;
    out.push_back(classify_journal_year(corpus.journal_name(group.journal),
                                        group.year, observations,
                                        q1_threshold));
  }
  return out;
}

std::vector<JournalYearQuartile> apply_recent_year_substitution(
    std::span<const JournalYearQuartile> quartiles,
    const SubstitutionRule& rule) {
  const auto is_target = [&](int year) {
    return std::find(rule.target_years.begin(), rule.target_years.end(),
                     year) != rule.target_years.end();
  };
  std::map<std::string_view, bool> source_flags;
  for (const auto& q : quartiles) {
    if (q.year == rule.source_year) source_flags[q.journal_id] = q.is_q1;
  }
  std::vector<JournalYearQuartile> out(quartiles.begin(), quartiles.end());
  for (auto& q : out) {
    if (!is_target(q.year) || q.year == rule.source_year) continue;
    auto it = source_flags.find(q.journal_id);
    if (it == source_flags.end()) continue;
    q.is_q1 = it->second;
    q.source_year = rule.source_year;
  }
  return out;
}

void write_quartiles_csv(std::span<const JournalYearQuartile> quartiles,
                         std::ostream& out) {
  out << "journal_id,year,median_percentile,is_q1,source_year\n";
  for (const auto& q : quartiles) {
    out << csv::escape(q.journal_id) << ',' << q.year << ','
        << csv::fixed_or_empty(q.median_percentile) << ','
        << (q.is_q1 ? "true" : "false") << ',' << q.source_year << '\n';
  }
}

}  // namespace talentscope
