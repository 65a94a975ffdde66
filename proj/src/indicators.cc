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
#include "talentscope/indicators.h"

#include <algorithm>
#include <map>
#include <utility>

#include "talentscope/csv.h"

namespace talentscope {

std::string_view indicator_name(Indicator indicator) {
  switch (indicator) {
    case Indicator::kO: return "O";
    case Indicator::kQ1: return "Q1";
    case Indicator::kC: return "C";
  }
  return "O";
}

std::optional<Indicator> parse_indicator(std::string_view name) {
  for (Indicator i : kAllIndicators) {
    if (indicator_name(i) == name) return i;
  }
  return std::nullopt;
}

double AuthorFieldIndicators::value(Indicator indicator) const {
  switch (indicator) {
    case Indicator::kO: return papers;
    case Indicator::kQ1: return q1_papers;
    case Indicator::kC: return corresponding_papers;
  }
  return papers;
}

int first_paper_year(Corpus::AuthorId author, const Corpus& corpus) {
  const auto records = corpus.records_of_author(author);
  if (records.empty()) throw Error("author has no records");
  int first = corpus.records()[records.front()].year;
  for (auto r : records) first = std::min(first, corpus.records()[r].year);
  return first;
}

int first_paper_year(std::string_view author_id, const Corpus& corpus) {
  const auto author = corpus.find_author(author_id);
  if (!author) throw Error("unknown author '" + std::string(author_id) + "'");
  return first_paper_year(*author, corpus);
}

std::vector<bool> q1_flags_by_record(
    const Corpus& corpus, std::span<const JournalYearQuartile> quartiles) {
  std::map<std::pair<Corpus::JournalId, int>, bool> flags;
  for (const auto& q : quartiles) {
    if (auto journal = corpus.find_journal(q.journal_id)) {
      flags[{*journal, q.year}] = q.is_q1;
    }
  }
  std::vector<bool> by_record(corpus.size(), false);
  for (const auto& group : corpus.journal_year_groups()) {
    auto it = flags.find({group.journal, group.year});
    if (it == flags.end() || !it->second) continue;
    for (auto r : group.records) by_record[r] = true;
  }
  return by_record;
}

std::vector<AuthorFieldIndicators> compute_window_indicators(
    const Corpus& corpus, std::span<const JournalYearQuartile> quartiles,
    int window_length) {
  if (window_length < 1) throw Error("window_length must be positive");
  const auto q1 = q1_flags_by_record(corpus, quartiles);
  std::vector<AuthorFieldIndicators> out;
  std::vector<AuthorFieldIndicators> per_field;
  for (Corpus::AuthorId a = 0; a < corpus.author_count(); ++a) {
    const int y0 = first_paper_year(a, corpus);
    const int last = y0 + window_length - 1;
    per_field.clear();
    for (auto r : corpus.records_of_author(a)) {
      const auto& rec = corpus.records()[r];
      if (rec.year > last) continue;
      const auto fields = corpus.fields_of(r);
      if (fields.empty()) continue;
      const double share = 1.0 / static_cast<double>(fields.size());
      const bool corresponding = corpus.is_corresponding(r, a);
      for (BroadField f : fields) {
        auto it = std::find_if(per_field.begin(), per_field.end(),
                               [f](const auto& x) { return x.field == f; });
        if (it == per_field.end()) {
          per_field.push_back({corpus.author_name(a), f, y0, 0, 0, 0});
          it = per_field.end() - 1;
        }
        it->papers += share;
        if (q1[r]) it->q1_papers += share;
        if (corresponding) it->corresponding_papers += share;
      }
    }
    std::sort(per_field.begin(), per_field.end(),
              [](const auto& x, const auto& y) { return x.field < y.field; });
    for (auto& row : per_field) out.push_back(std::move(row));
  }
  return out;
}

void write_indicators_csv(std::span<const AuthorFieldIndicators> rows,
                          std::ostream& out) {
  out << "author_id,field,first_paper_year,O,Q1,C\n";
  for (const auto& row : rows) {
    out << csv::escape(row.author_id) << ',' << row.field.code << ','
        << row.first_paper_year << ',' << csv::fixed(row.papers) << ','
        << csv::fixed(row.q1_papers) << ','
        << csv::fixed(row.corresponding_papers) << '\n';
  }
}

}  // namespace talentscope
