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
#ifndef TALENTSCOPE_INDICATORS_H_
#define TALENTSCOPE_INDICATORS_H_

#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "talentscope/corpus.h"
#include "talentscope/quartiles.h"

namespace talentscope {

inline constexpr int kDefaultWindowLength = 10;

// The three early-career indicators: all papers (O), papers in Q1
// journal-years (Q1), corresponding-author papers (C).
enum class Indicator { kO, kQ1, kC };

inline constexpr std::array<Indicator, 3> kAllIndicators = {
    Indicator::kO, Indicator::kQ1, Indicator::kC};

std::string_view indicator_name(Indicator indicator);
std::optional<Indicator> parse_indicator(std::string_view name);

// Fractional indicator values of one author in one broad field over the
// author's early-career window. Invariant: 0 <= q1, corresponding <= papers
// and papers > 0.
struct AuthorFieldIndicators {
  std::string author_id;
  BroadField field;
  int first_paper_year = 0;
  double papers = 0;                // O
  double q1_papers = 0;             // Q1
  double corresponding_papers = 0;  // C

  double value(Indicator indicator) const;
  bool operator==(const AuthorFieldIndicators&) const = default;
};

// Earliest year over all of the author's corpus records, including records
// with no eligible field. Throws Error for an unknown author.
int first_paper_year(std::string_view author_id, const Corpus& corpus);
int first_paper_year(Corpus::AuthorId author, const Corpus& corpus);

// Per-record Q1 flags resolved against the corpus journals; records whose
// journal-year has no entry are not Q1.
std::vector<bool> q1_flags_by_record(
    const Corpus& corpus, std::span<const JournalYearQuartile> quartiles);

// Every in-window paper with k >= 1 eligible fields adds 1/k to O in each of
// its fields, 1/k to Q1 when its journal-year is Q1, and 1/k to C when the
// author is a corresponding author. Counting is full per author. The window
// is [y0, y0 + window_length - 1]. Sorted by (author_id, field).
std::vector<AuthorFieldIndicators> compute_window_indicators(
    const Corpus& corpus, std::span<const JournalYearQuartile> quartiles,
    int window_length = kDefaultWindowLength);

// author_id,field,first_paper_year,O,Q1,C (six decimals).
void write_indicators_csv(std::span<const AuthorFieldIndicators> rows,
                          std::ostream& out);

}  // namespace talentscope

#endif  // TALENTSCOPE_INDICATORS_H_
