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
#ifndef TALENTSCOPE_SYNTHGEN_H_
#define TALENTSCOPE_SYNTHGEN_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "talentscope/record_io.h"

namespace talentscope {

// Parameters of the synthetic publication generator.
//
// Each author has a home field, a first-paper year, a persistent
// productivity level and a latent ability. Ability during the first
// `early_career_years` is `early`; afterwards it is
// rho * early + sqrt(1 - rho^2) * fresh noise, with rho =
// ability_correlation. Ability raises productivity, the prestige of the
// journals chosen, and citations. Citations are a floored lognormal draw
// whose location is shifted by journal prestige and author ability.
struct SynthConfig {
  std::uint64_t seed = 42;
  int n_authors = 5000;
  int n_journals = 240;
  int n_fields = 8;  // at most 20
  int first_year = 1999;
  int last_year = 2020;
  // First-paper years are drawn uniformly from this interval.
  int career_start_first = 1999;
  int career_start_last = 2011;
  int early_career_years = 10;

  double papers_per_year = 1.2;          // mean lead-authored papers
  double productivity_sigma = 0.5;       // lognormal spread across authors
  double productivity_ability_weight = 0.1;
  double citation_mu = 1.5;
  double citation_sigma = 0.7;
  double citation_ability_weight = 0.4;
  double prestige_sigma = 2.0;
  double journal_ability_weight = 0.6;   // in [0, 1]
  double ability_correlation = 0.8;      // in [0, 1]

  double corresponding_prob = 0.6;
  double multiple_corresponding_prob = 0.05;
  int max_coauthors = 3;
  double multifield_prob = 0.2;          // journal spans a second field
  double multidisciplinary_prob = 0.05;  // journal also carries code 1000
  double excluded_paper_prob = 0.03;     // paper lands in an excluded area
  double attrition_rate = 0.02;          // yearly career-exit probability
  double review_prob = 0.08;
  double proceedings_prob = 0.07;
  double other_type_prob = 0.02;         // emitted as "editorial"

  // Throws Error naming the offending parameter.
  void validate() const;
  // Sets a parameter from text; key names equal the member names.
  void set(std::string_view key, std::string_view value);
  // Every parameter rendered as text, in declaration order.
  std::vector<std::pair<std::string, std::string>> to_key_values() const;
};

// Deterministic for a given config, across runs and platforms: uses
// std::mt19937_64 with hand-written variate transforms.
std::vector<InputRecord> generate(const SynthConfig& config);

// generate() serialized as JSON lines.
void write_synthetic(const SynthConfig& config, std::ostream& out);

}  // namespace talentscope

#endif  // TALENTSCOPE_SYNTHGEN_H_
