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
// Brute-force group membership used to check cohort selection.
#ifndef TALENTSCOPE_TESTS_COHORT_ORACLE_H_
#define TALENTSCOPE_TESTS_COHORT_ORACLE_H_

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "talentscope/cohorts.h"

namespace talentscope::testing {

using MemberSet = std::set<std::string>;

// Brute force: v is in the top X% iff fewer than ceil(X n / 100) population
// values are strictly greater.
inline bool in_top(double v, const std::vector<double>& population,
                   double percent) {
  const auto n = population.size();
  const auto k = std::clamp<std::size_t>(
      static_cast<std::size_t>(
          std::ceil(percent * static_cast<double>(n) / 100)),
      1, n);
  const auto greater = std::count_if(population.begin(), population.end(),
                                     [v](double w) { return w > v; });
  return static_cast<std::size_t>(greater) < k;
}

struct Oracle {
  MemberSet talent;
  MemberSet control;
};

inline Oracle enumerate(const std::vector<AuthorFieldIndicators>& rows,
                        IndicatorCombination combination,
                        const TopPercents& p) {
  Oracle out;
  for (const auto& r : rows) {
    bool talent = true;
    bool control = true;
    for (auto ind : combination.members()) {
      std::vector<double> pop;
      for (const auto& o : rows) pop.push_back(o.value(ind));
      const double v = r.value(ind);
      talent = talent && in_top(v, pop, p.talent);
      control = control && !in_top(v, pop, p.control_upper) &&
                in_top(v, pop, p.control_lower);
    }
    if (talent) out.talent.insert(r.author_id);
    if (control) out.control.insert(r.author_id);
  }
  return out;
}

}  // namespace talentscope::testing

#endif  // TALENTSCOPE_TESTS_COHORT_ORACLE_H_
