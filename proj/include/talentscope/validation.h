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
#ifndef TALENTSCOPE_VALIDATION_H_
#define TALENTSCOPE_VALIDATION_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "talentscope/cohorts.h"
#include "talentscope/corpus.h"
#include "talentscope/percentiles.h"
#include "talentscope/stats.h"

namespace talentscope {

inline constexpr int kDefaultEndYear = 2018;

// Later-career performance: papers from y0 + window_length to end_year.
struct AuthorPostWindowPerformance {
  std::string author_id;
  int first_paper_year = 0;
  int n_papers = 0;  // papers with at least one eligible field
  double median_percentile = 0;  // over all (paper, field) observations

  bool operator==(const AuthorPostWindowPerformance&) const = default;
};

// nullopt when the author has no eligible paper in the post-window period.
// Throws Error for an unknown author.
std::optional<AuthorPostWindowPerformance> post_window_performance(
    std::string_view author_id, const Corpus& corpus,
    const PercentileTable& percentiles,
    int window_length = kDefaultWindowLength, int end_year = kDefaultEndYear);

// Entries for every listed author that has one, in input order.
std::vector<AuthorPostWindowPerformance> compute_post_window_performance(
    const Corpus& corpus, const PercentileTable& percentiles,
    std::span<const std::string> authors,
    int window_length = kDefaultWindowLength, int end_year = kDefaultEndYear);

struct GroupSummary {
  std::size_t n_authors = 0;
  std::size_t dropped_no_postwindow = 0;
  std::optional<DistributionStats> papers;       // over n_papers
  std::optional<DistributionStats> percentiles;  // over median_percentile
};

// Statistics of a group whose members with a performance entry are given;
// n_authors counts every member, including those without an entry.
GroupSummary summarize_group(
    std::span<const AuthorPostWindowPerformance> members,
    std::size_t n_authors);

// One combination's talent and control rows plus the talent - control row.
struct CombinationSummary {
  IndicatorCombination combination;
  GroupSummary talent;
  GroupSummary control;
  std::int64_t n_authors_difference = 0;
  std::int64_t dropped_difference = 0;
  std::optional<DistributionStats> papers_difference;
  std::optional<DistributionStats> percentiles_difference;
};

// Difference rows are exact subtraction; absent when either side is.
CombinationSummary combine(IndicatorCombination combination,
                           GroupSummary talent, GroupSummary control);

struct ValidationSummary {
  // Canonical combination order.
  std::vector<CombinationSummary> combinations;

  const CombinationSummary& at(IndicatorCombination combination) const;
};

// Groups count distinct authors per (group, combination) across fields.
// Authors without a performance entry are reported as dropped and excluded
// from both statistic families.
ValidationSummary summarize(
    std::span<const CohortAssignment> assignments,
    std::span<const AuthorPostWindowPerformance> performances);

// Descending talent - control median-percentile gap; ties and missing gaps
// ordered by combination name, missing gaps last.
std::vector<IndicatorCombination> rank_combinations(
    const ValidationSummary& summary);

// group,combination,n_authors,dropped_no_postwindow
void write_report_counts(const ValidationSummary& summary, std::ostream& out);
// group,combination,min,q1,median,mean,q3,max
void write_report_papers(const ValidationSummary& summary, std::ostream& out);
// group,combination,q1,median,mean,q3
void write_report_percentiles(const ValidationSummary& summary,
                              std::ostream& out);
void write_summary_text(const ValidationSummary& summary, std::ostream& out);
// author_id,first_paper_year,n_papers,median_percentile
void write_performance_csv(std::span<const AuthorPostWindowPerformance> rows,
                           std::ostream& out);

}  // namespace talentscope

#endif  // TALENTSCOPE_VALIDATION_H_
