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
#ifndef TALENTSCOPE_COHORTS_H_
#define TALENTSCOPE_COHORTS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "talentscope/corpus.h"
#include "talentscope/indicators.h"

namespace talentscope {

// A non-empty subset of {O, Q1, C}; membership conditions are conjunctive.
class IndicatorCombination {
 public:
  // Defaults to {O}.
  constexpr IndicatorCombination() = default;

  static std::optional<IndicatorCombination> from_mask(std::uint8_t mask);
  static IndicatorCombination of(std::initializer_list<Indicator> members);
  // Accepts the canonical names: O, Q1, C, OxQ1, OxC, Q1xC, OxQ1xC.
  static std::optional<IndicatorCombination> parse(std::string_view name);

  bool contains(Indicator indicator) const {
    return (mask_ & bit(indicator)) != 0;
  }
  std::vector<Indicator> members() const;
  std::uint8_t mask() const { return mask_; }
  std::string name() const;
  // Position in the canonical listing order (0..6).
  int ordinal() const;

  bool operator==(const IndicatorCombination&) const = default;

 private:
  constexpr explicit IndicatorCombination(std::uint8_t mask) : mask_(mask) {}
  static constexpr std::uint8_t bit(Indicator indicator) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(indicator));
  }

  std::uint8_t mask_ = 1;
};

// O, Q1, C, OxQ1, OxC, Q1xC, OxQ1xC.
const std::array<IndicatorCombination, 7>& all_combinations();

enum class Group { kTalent, kControl };
std::string_view group_name(Group group);

struct CohortAssignment {
  std::string author_id;
  BroadField field;
  IndicatorCombination combination;
  Group group = Group::kTalent;

  bool operator==(const CohortAssignment&) const = default;
};

// Top-X% cut points: talent is the top `talent` percent; control is below
// the top `control_upper` percent but inside the top `control_lower`.
struct TopPercents {
  double talent = 1;
  double control_upper = 5;
  double control_lower = 10;

  // Throws unless 0 < talent <= control_upper <= control_lower <= 100.
  void validate() const;
};

struct ThresholdRow {
  BroadField field;
  Indicator indicator = Indicator::kO;
  std::size_t n = 0;
  double talent_cutoff = 0;         // t1
  double control_upper_cutoff = 0;  // t5
  double control_lower_cutoff = 0;  // t10

  bool operator==(const ThresholdRow&) const = default;
};

// Descending rank (1-based) that defines the top-X% cutoff: ceil(X/100 * n),
// clamped to [1, n].
std::size_t top_rank(std::size_t n, double percent);

// Value at descending rank top_rank(n, percent). Members qualify when their
// value is >= the cutoff, so ties at the boundary are all included.
double top_cutoff(std::vector<double> values, double percent);

// Authors (sorted ids) whose first paper year lies in `first_years`.
// Throws when [first_years.first, first_years.last + window_length - 1]
// is not covered by the corpus year range.
std::vector<std::string> build_cohort(const Corpus& corpus,
                                      YearRange first_years,
                                      int window_length = kDefaultWindowLength);

// Cutoffs for one (field, indicator). The population is every cohort author
// with an indicator entry in the field; nullopt when it is empty.
// `cohort` and `indicators` must be sorted by author id.
std::optional<ThresholdRow> compute_threshold(
    std::span<const std::string> cohort,
    std::span<const AuthorFieldIndicators> indicators, BroadField field,
    Indicator indicator, const TopPercents& percents = {});

// All fields present in the cohort, each with O, Q1 and C rows.
std::vector<ThresholdRow> compute_thresholds(
    std::span<const std::string> cohort,
    std::span<const AuthorFieldIndicators> indicators,
    const TopPercents& percents = {});

// Talent: value >= t1 for every member indicator. Control: t10 <= value < t5
// for every member indicator. Throws if a needed threshold row is missing.
std::vector<CohortAssignment> select_groups(
    std::span<const std::string> cohort,
    std::span<const AuthorFieldIndicators> indicators,
    std::span<const ThresholdRow> thresholds,
    IndicatorCombination combination, BroadField field);

// select_groups over every thresholded field and all seven combinations.
// Sorted by (author_id, field, combination ordinal, group).
std::vector<CohortAssignment> select_all_groups(
    std::span<const std::string> cohort,
    std::span<const AuthorFieldIndicators> indicators,
    std::span<const ThresholdRow> thresholds);

// author_id,field,combination,group
void write_assignments_csv(std::span<const CohortAssignment> rows,
                           std::ostream& out);
// field,indicator,n,t1,t5,t10
void write_thresholds_csv(std::span<const ThresholdRow> rows,
                          std::ostream& out);

}  // namespace talentscope

#endif  // TALENTSCOPE_COHORTS_H_
