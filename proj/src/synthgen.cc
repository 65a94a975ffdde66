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
#include "talentscope/synthgen.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <variant>

#include "talentscope/common.h"

namespace talentscope {
namespace {

constexpr std::array<int, 20> kEligibleFields = {
    11, 13, 15, 16, 17, 19, 21, 22, 23, 24,
    25, 26, 27, 28, 29, 30, 31, 34, 35, 36};
constexpr std::array<int, 6> kExcludedCodes = {1202, 1404, 1800,
                                               2002, 3204, 3310};

using ParamRef = std::variant<std::uint64_t*, int*, double*>;

std::vector<std::pair<std::string_view, ParamRef>> params(SynthConfig& c) {
  return {
      {"seed", &c.seed},
      {"n_authors", &c.n_authors},
      {"n_journals", &c.n_journals},
      {"n_fields", &c.n_fields},
      {"first_year", &c.first_year},
      {"last_year", &c.last_year},
      {"career_start_first", &c.career_start_first},
      {"career_start_last", &c.career_start_last},
      {"early_career_years", &c.early_career_years},
      {"papers_per_year", &c.papers_per_year},
      {"productivity_sigma", &c.productivity_sigma},
      {"productivity_ability_weight", &c.productivity_ability_weight},
      {"citation_mu", &c.citation_mu},
      {"citation_sigma", &c.citation_sigma},
      {"citation_ability_weight", &c.citation_ability_weight},
      {"prestige_sigma", &c.prestige_sigma},
      {"journal_ability_weight", &c.journal_ability_weight},
      {"ability_correlation", &c.ability_correlation},
      {"corresponding_prob", &c.corresponding_prob},
      {"multiple_corresponding_prob", &c.multiple_corresponding_prob},
      {"max_coauthors", &c.max_coauthors},
      {"multifield_prob", &c.multifield_prob},
      {"multidisciplinary_prob", &c.multidisciplinary_prob},
      {"excluded_paper_prob", &c.excluded_paper_prob},
      {"attrition_rate", &c.attrition_rate},
      {"review_prob", &c.review_prob},
      {"proceedings_prob", &c.proceedings_prob},
      {"other_type_prob", &c.other_type_prob},
  };
}

std::string render(double v) {
  std::array<char, 32> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

void require(bool ok, std::string_view param, std::string_view what) {
  if (!ok) {
    throw Error("invalid synth parameter '" + std::string(param) + "': " +
                std::string(what));
  }
}

void require_probability(double p, std::string_view param) {
  require(p >= 0.0 && p <= 1.0, param, "must lie in [0, 1]");
}

// Variates built directly on the engine so streams do not depend on the
// standard library's distribution implementations.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  bool bernoulli(double p) { return uniform() < p; }
  // Uniform integer in [0, n).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform() * static_cast<double>(n));
  }
  int between(int lo, int hi) {
    return lo + static_cast<int>(index(static_cast<std::size_t>(hi - lo + 1)));
  }
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
    has_spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }
  int poisson(double lambda) {
    if (lambda > 30.0) {
      return std::max(0, static_cast<int>(std::lround(
                             lambda + std::sqrt(lambda) * normal())));
    }
    const double limit = std::exp(-lambda);
    int k = 0;
    double p = uniform();
    while (p > limit) {
      ++k;
      p *= uniform();
    }
    return k;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0;
  bool has_spare_ = false;
};

double standard_normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

std::string padded(char prefix, std::size_t value, int width) {
  std::string digits = std::to_string(value);
  if (static_cast<int>(digits.size()) < width) {
    digits.insert(0, static_cast<std::size_t>(width) - digits.size(), '0');
  }
  return prefix + digits;
}

struct Journal {
  std::string id;
  std::vector<int> asjc;
  double prestige = 0;
};

struct Author {
  std::string id;
  int field_slot = 0;
  int start = 0;
  int end = 0;  // last active year
  double early = 0;
  double late = 0;
  double productivity = 0;
};

}  // namespace

void SynthConfig::validate() const {
  require(n_authors >= 1, "n_authors", "must be positive");
  require(n_fields >= 1 && n_fields <= static_cast<int>(kEligibleFields.size()),
          "n_fields", "must lie in [1, 20]");
  require(n_journals >= n_fields, "n_journals", "must be at least n_fields");
  require(first_year <= last_year, "last_year", "must be >= first_year");
  require(career_start_first >= first_year &&
              career_start_first <= career_start_last,
          "career_start_first",
          "must lie in [first_year, career_start_last]");
  require(career_start_last <= last_year, "career_start_last",
          "must be <= last_year");
  require(early_career_years >= 1, "early_career_years", "must be positive");
  require(papers_per_year > 0, "papers_per_year", "must be positive");
  require(productivity_sigma >= 0, "productivity_sigma", "must be >= 0");
  require(citation_sigma > 0, "citation_sigma", "must be positive");
  require(prestige_sigma >= 0, "prestige_sigma", "must be >= 0");
  require(std::isfinite(citation_mu), "citation_mu", "must be finite");
  require(std::isfinite(citation_ability_weight), "citation_ability_weight",
          "must be finite");
  require(std::isfinite(productivity_ability_weight),
          "productivity_ability_weight", "must be finite");
  require_probability(journal_ability_weight, "journal_ability_weight");
  require_probability(ability_correlation, "ability_correlation");
  require_probability(corresponding_prob, "corresponding_prob");
  require_probability(multiple_corresponding_prob,
                      "multiple_corresponding_prob");
  require(max_coauthors >= 0, "max_coauthors", "must be >= 0");
  require_probability(multifield_prob, "multifield_prob");
  require_probability(multidisciplinary_prob, "multidisciplinary_prob");
  require_probability(excluded_paper_prob, "excluded_paper_prob");
  require_probability(attrition_rate, "attrition_rate");
  require_probability(review_prob, "review_prob");
  require_probability(proceedings_prob, "proceedings_prob");
  require_probability(other_type_prob, "other_type_prob");
  require(review_prob + proceedings_prob + other_type_prob <= 1.0,
          "other_type_prob", "type probabilities must sum to at most 1");
}

void SynthConfig::set(std::string_view key, std::string_view value) {
  for (auto& [name, ref] : params(*this)) {
    if (name != key) continue;
    const bool ok = std::visit(
        [&](auto* target) {
          using T = std::remove_pointer_t<decltype(target)>;
          T parsed{};
          auto [ptr, ec] =
              std::from_chars(value.data(), value.data() + value.size(), parsed);
          if (ec != std::errc() || ptr != value.data() + value.size()) {
            return false;
          }
          *target = parsed;
          return true;
        },
        ref);
    require(ok, key, "cannot parse '" + std::string(value) + "'");
    return;
  }
  throw Error("unknown synth parameter '" + std::string(key) + "'");
}

std::vector<std::pair<std::string, std::string>> SynthConfig::to_key_values()
    const {
  SynthConfig copy = *this;
  std::vector<std::pair<std::string, std::string>> out;
  for (auto& [name, ref] : params(copy)) {
    std::string text = std::visit(
        [](auto* v) -> std::string {
          using T = std::remove_pointer_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>) {
            return render(*v);
          } else {
            return std::to_string(*v);
          }
        },
        ref);
    out.emplace_back(std::string(name), std::move(text));
  }
  return out;
}

std::vector<InputRecord> generate(const SynthConfig& config) {
  config.validate();
  Random rng(config.seed);

  // Journals: dealt round-robin over fields; per-field lists sorted by
  // prestige so journal choice can map a quantile to a journal.
  const int n_fields = config.n_fields;
  std::vector<Journal> journals;
  std::vector<std::vector<std::size_t>> field_journals(n_fields);
  for (int j = 0; j < config.n_journals; ++j) {
    Journal journal;
    journal.id = padded('J', static_cast<std::size_t>(j), 5);
    const int slot = j % n_fields;
    journal.asjc.push_back(kEligibleFields[slot] * 100 + rng.between(1, 30));
    if (n_fields > 1 && rng.bernoulli(config.multifield_prob)) {
      int other = rng.between(0, n_fields - 2);
      if (other >= slot) ++other;
      journal.asjc.push_back(kEligibleFields[other] * 100 + rng.between(1, 30));
    }
    if (rng.bernoulli(config.multidisciplinary_prob)) {
      journal.asjc.push_back(1000);
    }
    std::sort(journal.asjc.begin(), journal.asjc.end());
    journal.prestige = config.prestige_sigma * rng.normal();
    field_journals[slot].push_back(journals.size());
    journals.push_back(std::move(journal));
  }
  for (auto& list : field_journals) {
    std::stable_sort(list.begin(), list.end(), [&](auto a, auto b) {
      return journals[a].prestige < journals[b].prestige;
    });
  }
  // Humanities and social-science outlets, invisible to field computations.
  std::vector<Journal> excluded;
  for (std::size_t i = 0; i < kExcludedCodes.size(); ++i) {
    excluded.push_back({padded('X', i, 4), {kExcludedCodes[i]},
                        config.prestige_sigma * rng.normal()});
  }

  const double rho = config.ability_correlation;
  std::vector<Author> authors(static_cast<std::size_t>(config.n_authors));
  for (std::size_t a = 0; a < authors.size(); ++a) {
    auto& author = authors[a];
    author.id = padded('A', a, 7);
    author.field_slot = rng.between(0, n_fields - 1);
    author.start = rng.between(config.career_start_first,
                               config.career_start_last);
    author.end = author.start;
    while (author.end < config.last_year &&
           !rng.bernoulli(config.attrition_rate)) {
      ++author.end;
    }
    author.early = rng.normal();
    author.late = rho * author.early + std::sqrt(1.0 - rho * rho) * rng.normal();
    author.productivity = rng.normal();
  }

  const double sp = config.productivity_sigma;
  const double wp = config.productivity_ability_weight;
  const double wj = config.journal_ability_weight;
  const double wj_noise = std::sqrt(1.0 - wj * wj);

  std::vector<InputRecord> records;
  std::size_t next_id = 0;
  std::vector<std::vector<std::size_t>> active(n_fields);
  for (int year = config.first_year; year <= config.last_year; ++year) {
    for (auto& pool : active) pool.clear();
    for (std::size_t a = 0; a < authors.size(); ++a) {
      if (authors[a].start <= year && year <= authors[a].end) {
        active[authors[a].field_slot].push_back(a);
      }
    }
    for (int slot = 0; slot < n_fields; ++slot) {
      const auto& pool = active[slot];
      for (std::size_t lead : pool) {
        const Author& author = authors[lead];
        const double ability =
            year < author.start + config.early_career_years ? author.early
                                                            : author.late;
        const double rate =
            config.papers_per_year *
            std::exp(sp * author.productivity - sp * sp / 2 + wp * ability -
                     wp * wp / 2);
        int n_papers = rng.poisson(rate);
        if (year == author.start) n_papers = std::max(n_papers, 1);
        for (int p = 0; p < n_papers; ++p) {
          InputRecord rec;
          rec.id = padded('P', next_id++, 9);
          rec.year = year;
          const double t = rng.uniform();
          if (t < config.other_type_prob) {
            rec.type = "editorial";
          } else if (t < config.other_type_prob + config.review_prob) {
            rec.type = "review";
          } else if (t < config.other_type_prob + config.review_prob +
                             config.proceedings_prob) {
            rec.type = "proceedings";
          } else {
            rec.type = "article";
          }
          const Journal* journal;
          if (rng.bernoulli(config.excluded_paper_prob)) {
            journal = &excluded[rng.index(excluded.size())];
          } else {
            const auto& list = field_journals[slot];
            const double q =
                standard_normal_cdf(wj * ability + wj_noise * rng.normal());
            const auto pick = std::min(
                static_cast<std::size_t>(q * static_cast<double>(list.size())),
                list.size() - 1);
            journal = &journals[list[pick]];
          }
          rec.journal = journal->id;
          rec.asjc = journal->asjc;

          rec.authors.push_back(author.id);
          const int n_coauthors = rng.between(0, config.max_coauthors);
          for (int c = 0; c < n_coauthors && pool.size() > 1; ++c) {
            const auto& candidate = authors[pool[rng.index(pool.size())]].id;
            if (std::find(rec.authors.begin(), rec.authors.end(), candidate) ==
                rec.authors.end()) {
              rec.authors.push_back(candidate);
            }
          }
          if (rec.authors.size() == 1 ||
              rng.bernoulli(config.corresponding_prob)) {
            rec.corresponding.push_back(author.id);
          } else {
            rec.corresponding.push_back(
                rec.authors[1 + rng.index(rec.authors.size() - 1)]);
          }
          if (rec.authors.size() > 1 &&
              rng.bernoulli(config.multiple_corresponding_prob)) {
            const auto& extra = rec.authors[rng.index(rec.authors.size())];
            if (extra != rec.corresponding.front()) {
              rec.corresponding.push_back(extra);
            }
          }

          const double log_citations =
              config.citation_mu + journal->prestige +
              config.citation_ability_weight * ability +
              config.citation_sigma * rng.normal();
          rec.citations = static_cast<std::int64_t>(
              std::floor(std::exp(std::min(log_citations, 20.0))));
          records.push_back(std::move(rec));
        }
      }
    }
  }
  return records;
}

void write_synthetic(const SynthConfig& config, std::ostream& out) {
  for (const auto& rec : generate(config)) out << to_jsonl(rec);
}

}  // namespace talentscope
