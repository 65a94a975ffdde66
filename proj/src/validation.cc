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
#include "talentscope/validation.h"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "talentscope/csv.h"
#include "talentscope/indicators.h"
#include "talentscope/parallel.h"

namespace talentscope {
namespace {

std::optional<AuthorPostWindowPerformance> performance_of(
    Corpus::AuthorId author, const Corpus& corpus,
    const PercentileTable& percentiles, int window_length, int end_year) {
  const int y0 = first_paper_year(author, corpus);
  const YearRange period{y0 + window_length, end_year};
  int n_papers = 0;
  std::vector<double> observations;
  for (auto r : corpus.records_of_author(author)) {
    if (!period.contains(corpus.records()[r].year)) continue;
    const auto pct = percentiles.of_record(r);
    if (pct.empty()) continue;
    ++n_papers;
    observations.insert(observations.end(), pct.begin(), pct.end());
  }
  if (n_papers == 0) return std::nullopt;
  return AuthorPostWindowPerformance{corpus.author_name(author), y0, n_papers,
                                     median_inplace(observations)};
}

std::optional<DistributionStats> diff(const std::optional<DistributionStats>& a,
                                      const std::optional<DistributionStats>& b) {
  if (!a || !b) return std::nullopt;
  return difference(*a, *b);
}

void write_stats(std::ostream& out, const std::optional<DistributionStats>& s,
                 bool with_extremes) {
  auto cell = [&](double DistributionStats::*member) {
    return s ? csv::fixed(*s.*member) : std::string();
  };
  if (with_extremes) out << ',' << cell(&DistributionStats::min);
  out << ',' << cell(&DistributionStats::q1) << ','
      << cell(&DistributionStats::median) << ','
      << cell(&DistributionStats::mean) << ',' << cell(&DistributionStats::q3);
  if (with_extremes) out << ',' << cell(&DistributionStats::max);
  out << '\n';
}

}  // namespace

std::optional<AuthorPostWindowPerformance> post_window_performance(
    std::string_view author_id, const Corpus& corpus,
    const PercentileTable& percentiles, int window_length, int end_year) {
  const auto author = corpus.find_author(author_id);
  if (!author) throw Error("unknown author '" + std::string(author_id) + "'");
  return performance_of(*author, corpus, percentiles, window_length, end_year);
}

std::vector<AuthorPostWindowPerformance> compute_post_window_performance(
    const Corpus& corpus, const PercentileTable& percentiles,
    std::span<const std::string> authors, int window_length, int end_year) {
  std::vector<std::optional<AuthorPostWindowPerformance>> slots(authors.size());
  parallel_for(authors.size(), [&](std::size_t i) {
    const auto author = corpus.find_author(authors[i]);
    if (!author) throw Error("unknown author '" + authors[i] + "'");
    slots[i] = performance_of(*author, corpus, percentiles, window_length,
                              end_year);
  });
  std::vector<AuthorPostWindowPerformance> out;
  for (auto& slot : slots) {
    if (slot) out.push_back(std::move(*slot));
  }
  return out;
}

GroupSummary summarize_group(
    std::span<const AuthorPostWindowPerformance> members,
    std::size_t n_authors) {
  GroupSummary s;
  s.n_authors = n_authors;
  s.dropped_no_postwindow = n_authors - members.size();
  if (members.empty()) return s;
  std::vector<double> papers, percentiles;
  for (const auto& m : members) {
    papers.push_back(m.n_papers);
    percentiles.push_back(m.median_percentile);
  }
  s.papers = describe(std::move(papers));
  s.percentiles = describe(std::move(percentiles));
  return s;
}

CombinationSummary combine(IndicatorCombination combination,
                           GroupSummary talent, GroupSummary control) {
  CombinationSummary out;
  out.combination = combination;
  out.n_authors_difference = static_cast<std::int64_t>(talent.n_authors) -
                             static_cast<std::int64_t>(control.n_authors);
  out.dropped_difference =
      static_cast<std::int64_t>(talent.dropped_no_postwindow) -
      static_cast<std::int64_t>(control.dropped_no_postwindow);
  out.papers_difference = diff(talent.papers, control.papers);
  out.percentiles_difference = diff(talent.percentiles, control.percentiles);
  out.talent = std::move(talent);
  out.control = std::move(control);
  return out;
}

const CombinationSummary& ValidationSummary::at(
    IndicatorCombination combination) const {
  for (const auto& c : combinations) {
    if (c.combination == combination) return c;
  }
  throw Error("combination " + combination.name() + " not in summary");
}

ValidationSummary summarize(
    std::span<const CohortAssignment> assignments,
    std::span<const AuthorPostWindowPerformance> performances) {
  std::unordered_map<std::string_view, const AuthorPostWindowPerformance*>
      by_author;
  for (const auto& p : performances) by_author.emplace(p.author_id, &p);

  ValidationSummary summary;
  for (const auto& combination : all_combinations()) {
    std::set<std::string_view> talent_ids, control_ids;
    for (const auto& a : assignments) {
      if (a.combination != combination) continue;
      (a.group == Group::kTalent ? talent_ids : control_ids)
          .insert(a.author_id);
    }
    auto group = [&](const std::set<std::string_view>& ids) {
      std::vector<AuthorPostWindowPerformance> members;
      for (auto id : ids) {
        if (auto it = by_author.find(id); it != by_author.end()) {
          members.push_back(*it->second);
        }
      }
      return summarize_group(members, ids.size());
    };
    summary.combinations.push_back(
        combine(combination, group(talent_ids), group(control_ids)));
  }
  return summary;
}

std::vector<IndicatorCombination> rank_combinations(
    const ValidationSummary& summary) {
  std::vector<const CombinationSummary*> rows;
  for (const auto& c : summary.combinations) rows.push_back(&c);
  std::sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) {
    const auto& ga = a->percentiles_difference;
    const auto& gb = b->percentiles_difference;
    if (ga.has_value() != gb.has_value()) return ga.has_value();
    if (ga && ga->median != gb->median) return ga->median > gb->median;
    return a->combination.name() < b->combination.name();
  });
  std::vector<IndicatorCombination> out;
  for (const auto* r : rows) out.push_back(r->combination);
  return out;
}

void write_report_counts(const ValidationSummary& summary, std::ostream& out) {
  out << "group,combination,n_authors,dropped_no_postwindow\n";
  for (const auto& c : summary.combinations) {
    out << "talent," << c.combination.name() << ',' << c.talent.n_authors
        << ',' << c.talent.dropped_no_postwindow << '\n';
  }
  for (const auto& c : summary.combinations) {
    out << "control," << c.combination.name() << ',' << c.control.n_authors
        << ',' << c.control.dropped_no_postwindow << '\n';
  }
  for (const auto& c : summary.combinations) {
    out << "difference," << c.combination.name() << ','
        << c.n_authors_difference << ',' << c.dropped_difference << '\n';
  }
}

void write_report_papers(const ValidationSummary& summary, std::ostream& out) {
  out << "group,combination,min,q1,median,mean,q3,max\n";
  for (const auto& c : summary.combinations) {
    out << "talent," << c.combination.name();
    write_stats(out, c.talent.papers, true);
  }
  for (const auto& c : summary.combinations) {
    out << "control," << c.combination.name();
    write_stats(out, c.control.papers, true);
  }
  for (const auto& c : summary.combinations) {
    out << "difference," << c.combination.name();
    write_stats(out, c.papers_difference, true);
  }
}

void write_report_percentiles(const ValidationSummary& summary,
                              std::ostream& out) {
  out << "group,combination,q1,median,mean,q3\n";
  for (const auto& c : summary.combinations) {
    out << "talent," << c.combination.name();
    write_stats(out, c.talent.percentiles, false);
  }
  for (const auto& c : summary.combinations) {
    out << "control," << c.combination.name();
    write_stats(out, c.control.percentiles, false);
  }
  for (const auto& c : summary.combinations) {
    out << "difference," << c.combination.name();
    write_stats(out, c.percentiles_difference, false);
  }
}

void write_summary_text(const ValidationSummary& summary, std::ostream& out) {
  const auto ranking = rank_combinations(summary);
  const auto& best = summary.at(ranking.front());
  if (best.percentiles_difference) {
    out << "best_combination: " << best.combination.name() << '\n';
  } else {
    out << "best_combination: none (no combination has both groups)\n";
  }
  out << "ranking by talent - control median percentile gap:\n";
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    const auto& c = summary.at(ranking[i]);
    out << "  " << (i + 1) << ". " << c.combination.name() << ' '
        << (c.percentiles_difference
                ? csv::fixed(c.percentiles_difference->median)
                : std::string("n/a"))
        << '\n';
  }
}

void write_performance_csv(std::span<const AuthorPostWindowPerformance> rows,
                           std::ostream& out) {
  out << "author_id,first_paper_year,n_papers,median_percentile\n";
  for (const auto& row : rows) {
    out << csv::escape(row.author_id) << ',' << row.first_paper_year << ','
        << row.n_papers << ',' << csv::fixed(row.median_percentile) << '\n';
  }
}

}  // namespace talentscope
