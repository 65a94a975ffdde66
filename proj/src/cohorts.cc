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
#include "talentscope/cohorts.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "talentscope/csv.h"

namespace talentscope {
namespace {

constexpr std::array<std::uint8_t, 7> kCanonicalMasks = {1, 2, 4, 3, 5, 6, 7};

bool in_cohort(std::span<const std::string> cohort, std::string_view author) {
  return std::binary_search(cohort.begin(), cohort.end(), author,
                            std::less<>());
}

using FieldRows = std::map<BroadField, std::vector<const AuthorFieldIndicators*>>;

FieldRows rows_by_field(std::span<const std::string> cohort,
                        std::span<const AuthorFieldIndicators> indicators) {
  FieldRows out;
  for (const auto& row : indicators) {
    if (in_cohort(cohort, row.author_id)) out[row.field].push_back(&row);
  }
  return out;
}

std::optional<ThresholdRow> threshold_for(
    const std::vector<const AuthorFieldIndicators*>& population,
    BroadField field, Indicator indicator, const TopPercents& percents) {
  if (population.empty()) return std::nullopt;
  std::vector<double> values;
  values.reserve(population.size());
  for (const auto* row : population) values.push_back(row->value(indicator));
  std::sort(values.begin(), values.end(), std::greater<>());
  const auto at = [&](double percent) {
    return values[top_rank(values.size(), percent) - 1];
  };
  return ThresholdRow{field,
                      indicator,
                      values.size(),
                      at(percents.talent),
                      at(percents.control_upper),
                      at(percents.control_lower)};
}

const ThresholdRow& find_threshold(std::span<const ThresholdRow> thresholds,
                                   BroadField field, Indicator indicator) {
  for (const auto& row : thresholds) {
    if (row.field == field && row.indicator == indicator) return row;
  }
  throw Error("no threshold for field " + std::to_string(field.code) +
              " indicator " + std::string(indicator_name(indicator)));
}

void select_from(const std::vector<const AuthorFieldIndicators*>& population,
                 std::span<const ThresholdRow> thresholds,
                 IndicatorCombination combination, BroadField field,
                 std::vector<CohortAssignment>& out) {
  std::vector<std::pair<Indicator, const ThresholdRow*>> cuts;
  for (Indicator i : combination.members()) {
    cuts.emplace_back(i, &find_threshold(thresholds, field, i));
  }
  for (const auto* row : population) {
    bool talent = true;
    bool control = true;
    for (const auto& [indicator, cut] : cuts) {
      const double v = row->value(indicator);
      talent = talent && v >= cut->talent_cutoff;
      control = control && v < cut->control_upper_cutoff &&
                v >= cut->control_lower_cutoff;
    }
    if (talent) {
      out.push_back({row->author_id, field, combination, Group::kTalent});
    } else if (control) {
      out.push_back({row->author_id, field, combination, Group::kControl});
    }
  }
}

}  // namespace

std::optional<IndicatorCombination> IndicatorCombination::from_mask(
    std::uint8_t mask) {
  if (mask == 0 || mask > 7) return std::nullopt;
  return IndicatorCombination(mask);
}

IndicatorCombination IndicatorCombination::of(
    std::initializer_list<Indicator> members) {
  std::uint8_t mask = 0;
  for (Indicator i : members) mask |= bit(i);
  if (mask == 0) throw Error("empty indicator combination");
  return IndicatorCombination(mask);
}

std::optional<IndicatorCombination> IndicatorCombination::parse(
    std::string_view name) {
  for (const auto& c : all_combinations()) {
    if (c.name() == name) return c;
  }
  return std::nullopt;
}

std::vector<Indicator> IndicatorCombination::members() const {
  std::vector<Indicator> out;
  for (Indicator i : kAllIndicators) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string IndicatorCombination::name() const {
  std::string out;
  for (Indicator i : members()) {
    if (!out.empty()) out.push_back('x');
    out += indicator_name(i);
  }
  return out;
}

int IndicatorCombination::ordinal() const {
  return static_cast<int>(
      std::find(kCanonicalMasks.begin(), kCanonicalMasks.end(), mask_) -
      kCanonicalMasks.begin());
}

const std::array<IndicatorCombination, 7>& all_combinations() {
  static const auto kAll = [] {
    std::array<IndicatorCombination, 7> out;
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = *IndicatorCombination::from_mask(kCanonicalMasks[i]);
    }
    return out;
  }();
  return kAll;
}

std::string_view group_name(Group group) {
  return group == Group::kTalent ? "talent" : "control";
}

void TopPercents::validate() const {
  if (!(talent > 0 && talent <= control_upper &&
        control_upper <= control_lower && control_lower <= 100)) {
    throw Error(
        "top percents must satisfy 0 < talent <= control_upper <= "
        "control_lower <= 100");
  }
}

std::size_t top_rank(std::size_t n, double percent) {
  if (n == 0) throw Error("top_rank of an empty population");
  const double raw = std::ceil(percent * static_cast<double>(n) / 100.0);
  return std::clamp<std::size_t>(static_cast<std::size_t>(std::max(raw, 1.0)),
                                 1, n);
}

double top_cutoff(std::vector<double> values, double percent) {
  if (values.empty()) throw Error("top_cutoff of an empty population");
  const auto k = top_rank(values.size(), percent);
  std::nth_element(values.begin(), values.begin() + (k - 1), values.end(),
                   std::greater<>());
  return values[k - 1];
}

std::vector<std::string> build_cohort(const Corpus& corpus,
                                      YearRange first_years,
                                      int window_length) {
  const YearRange covered = corpus.year_range();
  if (first_years.first > first_years.last ||
      first_years.first < covered.first ||
      first_years.last + window_length - 1 > covered.last) {
    throw Error("cohort range [" + std::to_string(first_years.first) + ", " +
                std::to_string(first_years.last) + "] plus a " +
                std::to_string(window_length) +
                "-year window is outside corpus coverage [" +
                std::to_string(covered.first) + ", " +
                std::to_string(covered.last) + "]");
  }
  std::vector<std::string> out;
  for (Corpus::AuthorId a = 0; a < corpus.author_count(); ++a) {
    if (first_years.contains(first_paper_year(a, corpus))) {
      out.push_back(corpus.author_name(a));
    }
  }
  return out;
}

std::optional<ThresholdRow> compute_threshold(
    std::span<const std::string> cohort,
    std::span<const AuthorFieldIndicators> indicators, BroadField field,
    Indicator indicator, const TopPercents& percents) {
  percents.validate();
  std::vector<const AuthorFieldIndicators*> population;
  for (const auto& row : indicators) {
    if (row.field == field && in_cohort(cohort, row.author_id)) {
      population.push_back(&row);
    }
  }
  return threshold_for(population, field, indicator, percents);
}

std::vector<ThresholdRow> compute_thresholds(
    std::span<const std::string> cohort,
    std::span<const AuthorFieldIndicators> indicators,
    const TopPercents& percents) {
  percents.validate();
  std::vector<ThresholdRow> out;
  for (const auto& [field, population] : rows_by_field(cohort, indicators)) {
    for (Indicator i : kAllIndicators) {
      out.push_back(*threshold_for(population, field, i, percents));
    }
  }
  return out;
}

std::vector<CohortAssignment> select_groups(
    std::span<const std::string> cohort,
    std::span<const AuthorFieldIndicators> indicators,
    std::span<const ThresholdRow> thresholds,
    IndicatorCombination combination, BroadField field) {
  std::vector<const AuthorFieldIndicators*> population;
  for (const auto& row : indicators) {
    if (row.field == field && in_cohort(cohort, row.author_id)) {
      population.push_back(&row);
    }
  }
  std::vector<CohortAssignment> out;
  if (!population.empty()) {
    select_from(population, thresholds, combination, field, out);
  }
  return out;
}

std::vector<CohortAssignment> select_all_groups(
    std::span<const std::string> cohort,
    std::span<const AuthorFieldIndicators> indicators,
    std::span<const ThresholdRow> thresholds) {
  std::vector<CohortAssignment> out;
  for (const auto& [field, population] : rows_by_field(cohort, indicators)) {
    for (const auto& combination : all_combinations()) {
      select_from(population, thresholds, combination, field, out);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::forward_as_tuple(a.author_id, a.field, a.combination.ordinal(),
                                 a.group) <
           std::forward_as_tuple(b.author_id, b.field, b.combination.ordinal(),
                                 b.group);
  });
  return out;
}

void write_assignments_csv(std::span<const CohortAssignment> rows,
                           std::ostream& out) {
  out << "author_id,field,combination,group\n";
  for (const auto& row : rows) {
    out << csv::escape(row.author_id) << ',' << row.field.code << ','
        << row.combination.name() << ',' << group_name(row.group) << '\n';
  }
}

void write_thresholds_csv(std::span<const ThresholdRow> rows,
                          std::ostream& out) {
  out << "field,indicator,n,t1,t5,t10\n";
  for (const auto& row : rows) {
    out << row.field.code << ',' << indicator_name(row.indicator) << ','
        << row.n << ',' << csv::fixed(row.talent_cutoff) << ','
        << csv::fixed(row.control_upper_cutoff) << ','
        << csv::fixed(row.control_lower_cutoff) << '\n';
  }
}

}  // namespace talentscope
