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
#include "talentscope/percentiles.h"

#include <algorithm>
#include <numeric>

#include "talentscope/csv.h"
#include "talentscope/parallel.h"

namespace talentscope {

void hazen_percentiles(std::span<const std::int64_t> values,
                       std::span<double> out) {
  const std::size_t n = values.size();
  if (n == 0) throw Error("empty group");
  if (out.size() != n) throw Error("hazen_percentiles: output size mismatch");
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return values[a] < values[b];
  });
  const double size = static_cast<double>(n);
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start + 1;
    while (end < n && values[order[end]] == values[order[start]]) ++end;
    const double below = static_cast<double>(start);
    const double tied = static_cast<double>(end - start);
    const double pct = 100.0 * (below + tied / 2.0) / size;
    for (std::size_t i = start; i < end; ++i) out[order[i]] = pct;
    start = end;
  }
}

std::vector<double> hazen_percentiles(std::span<const std::int64_t> values) {
  std::vector<double> out(values.size());
  hazen_percentiles(values, out);
  return out;
}

PercentileTable::PercentileTable(const Corpus& corpus) {
  const auto n = corpus.size();
  offsets_.assign(n + 1, 0);
  for (Corpus::RecordId r = 0; r < n; ++r) {
    offsets_[r + 1] = offsets_[r] +
                      static_cast<std::uint32_t>(corpus.fields_of(r).size());
  }
  by_record_.assign(offsets_.back(), 0.0);

  const auto groups = corpus.field_year_groups();
  std::vector<std::size_t> row_start(groups.size() + 1, 0);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    row_start[g + 1] = row_start[g] + groups[g].records.size();
  }
  rows_.resize(row_start.back());

  parallel_for(groups.size(), [&](std::size_t g) {
    const auto& group = groups[g];
    std::vector<std::int64_t> counts;
    counts.reserve(group.records.size());
    for (auto r : group.records) {
      counts.push_back(corpus.records()[r].citation_count);
    }
    std::vector<double> pct(counts.size());
    hazen_percentiles(counts, pct);
    for (std::size_t i = 0; i < group.records.size(); ++i) {
      const auto r = group.records[i];
      const auto fields = corpus.fields_of(r);
      const auto slot = std::lower_bound(fields.begin(), fields.end(),
                                         group.field) - fields.begin();
      by_record_[offsets_[r] + slot] = pct[i];
      auto& row = rows_[row_start[g] + i];
      row.pub_id = corpus.records()[r].pub_id;
      row.field = group.field;
      row.year = group.year;
      row.percentile = pct[i];
    }
  });
}

std::span<const double> PercentileTable::of_record(
    Corpus::RecordId record) const {
  return std::span<const double>(by_record_)
      .subspan(offsets_[record], offsets_[record + 1] - offsets_[record]);
}

PercentileTable compute_paper_percentiles(const Corpus& corpus) {
  return PercentileTable(corpus);
}

void write_percentiles_csv(const PercentileTable& table, std::ostream& out) {
  out << "pub_id,field,year,percentile\n";
  for (const auto& row : table.rows()) {
    out << csv::escape(row.pub_id) << ',' << row.field.code << ',' << row.year
        << ',' << csv::fixed(row.percentile) << '\n';
  }
}

}  // namespace talentscope
