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
#ifndef TALENTSCOPE_PERCENTILES_H_
#define TALENTSCOPE_PERCENTILES_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "talentscope/common.h"
#include "talentscope/corpus.h"

namespace talentscope {

// Hazen percentiles of a group, positionally aligned with `values`.
//
// A value with L strictly smaller and E equal members (itself included) in
// a group of n gets 100 * (L + E/2) / n, i.e. 100 * (r - 0.5) / n with tied
// values sharing the mean of their ranks. Results lie strictly inside
// (0, 100). Throws Error("empty group") on an empty input.
std::vector<double> hazen_percentiles(std::span<const std::int64_t> values);
void hazen_percentiles(std::span<const std::int64_t> values,
                       std::span<double> out);

struct PaperFieldPercentile {
  std::string pub_id;
  BroadField field;
  int year = 0;
  double percentile = 0;

  bool operator==(const PaperFieldPercentile&) const = default;
};

// Percentile observations of a corpus: one per (paper, eligible field).
class PercentileTable {
 public:
  PercentileTable() = default;
  explicit PercentileTable(const Corpus& corpus);

  // Canonical order: (field, year, pub_id).
  std::span<const PaperFieldPercentile> rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  // Percentiles of one record, aligned with corpus.fields_of(record).
  std::span<const double> of_record(Corpus::RecordId record) const;

 private:
  std::vector<PaperFieldPercentile> rows_;
  std::vector<std::uint32_t> offsets_;
  std::vector<double> by_record_;
};

// Applies hazen_percentiles to every (field, year) group of the corpus,
// all document types pooled.
PercentileTable compute_paper_percentiles(const Corpus& corpus);

// pub_id,field,year,percentile (six decimals).
void write_percentiles_csv(const PercentileTable& table, std::ostream& out);

}  // namespace talentscope

#endif  // TALENTSCOPE_PERCENTILES_H_
