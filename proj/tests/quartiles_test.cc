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
#include "talentscope/quartiles.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "talentscope/synthgen.h"
#include "test_support.h"

namespace talentscope {
namespace {

using testing::build;
using testing::make_record;

JournalYearQuartile classify(std::vector<double> obs, double threshold = 75) {
  return classify_journal_year("J", 2010, obs, threshold);
}

TEST(Classify, ThresholdIsInclusive) {
  const auto q = classify({75.0, 75.0});
  EXPECT_EQ(q.median_percentile, 75.0);
  EXPECT_TRUE(q.is_q1);
  EXPECT_EQ(q.source_year, 2010);
  EXPECT_FALSE(classify({75.0 - 1e-9}).is_q1);
}

TEST(Classify, BelowThresholdIsNotQ1) {
  const auto q = classify({74.0, 75.98});
  EXPECT_NEAR(*q.median_percentile, 74.99, 1e-12);
  EXPECT_FALSE(q.is_q1);
}

TEST(Classify, OddMedian) {
  const auto q = classify({95, 10, 80, 20, 90});
  EXPECT_EQ(q.median_percentile, 80.0);
  EXPECT_TRUE(q.is_q1);
}

TEST(AssignQ1, PoolsFieldsAndSkipsIneligibleJournalYears) {
  // J1 tops both of its two-paper groups: observations [75, 75].
  const auto corpus = build({
      make_record("p1", 2010, "J1", {1305}, {"a"}, {}, 10),
      make_record("p2", 2010, "J1", {1600}, {"a"}, {}, 10),
      make_record("p3", 2010, "J2", {1305, 1600}, {"b"}, {}, 1),
      make_record("p4", 2010, "J3", {1203}, {"c"}, {}, 100),
  });
  const auto q = assign_q1(compute_paper_percentiles(corpus), corpus);
  ASSERT_EQ(q.size(), 2u);
  EXPECT_EQ(q[0].journal_id, "J1");
  EXPECT_EQ(q[0].median_percentile, 75.0);
  EXPECT_TRUE(q[0].is_q1);
  EXPECT_EQ(q[1].journal_id, "J2");
  EXPECT_EQ(q[1].median_percentile, 25.0);
  EXPECT_FALSE(q[1].is_q1);
}

class SyntheticQuartiles : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    SynthConfig config;
    config.n_authors = 800;
    config.seed = 21;
    corpus_ = new Corpus(build(generate(config)));
    table_ = new PercentileTable(compute_paper_percentiles(*corpus_));
  }
  static void TearDownTestSuite() {
    delete table_;
    delete corpus_;
  }
  static Corpus* corpus_;
  static PercentileTable* table_;
};
Corpus* SyntheticQuartiles::corpus_ = nullptr;
PercentileTable* SyntheticQuartiles::table_ = nullptr;

TEST_F(SyntheticQuartiles, MediansMatchSortOracle) {
  std::map<std::pair<std::string, int>, std::vector<double>> pooled;
  for (Corpus::RecordId r = 0; r < corpus_->size(); ++r) {
    const auto& rec = corpus_->records()[r];
    for (double p : table_->of_record(r)) {
      pooled[{rec.journal_id, rec.year}].push_back(p);
    }
  }
  const auto q = assign_q1(*table_, *corpus_);
  ASSERT_EQ(q.size(), pooled.size());
  for (const auto& entry : q) {
    auto obs = pooled.at({entry.journal_id, entry.year});
    std::sort(obs.begin(), obs.end());
    const std::size_t n = obs.size();
    const double med =
        n % 2 == 1 ? obs[n / 2] : (obs[n / 2 - 1] + obs[n / 2]) / 2;
    ASSERT_EQ(*entry.median_percentile, med);
    ASSERT_EQ(entry.is_q1, med >= 75.0);
  }
}

TEST_F(SyntheticQuartiles, RaisingThresholdNeverAddsQ1) {
  std::vector<std::vector<JournalYearQuartile>> runs;
  for (double t : {0.0, 25.0, 50.0, 74.5, 75.0, 80.0, 99.0, 100.0}) {
    runs.push_back(assign_q1(*table_, *corpus_, t));
  }
  for (std::size_t k = 1; k < runs.size(); ++k) {
    ASSERT_EQ(runs[k].size(), runs[k - 1].size());
    for (std::size_t i = 0; i < runs[k].size(); ++i) {
      ASSERT_FALSE(runs[k][i].is_q1 && !runs[k - 1][i].is_q1);
    }
  }
}

TEST_F(SyntheticQuartiles, NonDegenerateShare) {
  const auto q = assign_q1(*table_, *corpus_);
  const auto q1 =
      std::count_if(q.begin(), q.end(), [](const auto& e) { return e.is_q1; });
  const double share = static_cast<double>(q1) / static_cast<double>(q.size());
  EXPECT_GT(share, 0.1);
  EXPECT_LT(share, 0.4);
}

JournalYearQuartile entry(std::string journal, int year, bool q1) {
  return {std::move(journal), year, 50.0, q1, year};
}

TEST(Substitution, CopiesSourceFlag) {
  const std::vector<JournalYearQuartile> in = {
      entry("J", 2018, true), entry("J", 2019, false), entry("K", 2020, true)};
  const auto out = apply_recent_year_substitution(in);
  EXPECT_TRUE(out[1].is_q1);
  EXPECT_EQ(out[1].source_year, 2018);
  EXPECT_EQ(out[1].median_percentile, 50.0);
  EXPECT_TRUE(out[2].is_q1);
  EXPECT_EQ(out[2].source_year, 2020);
  EXPECT_EQ(out[0], in[0]);
}

TEST(Substitution, IdempotentAndScoped) {
  std::mt19937_64 rng(4);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<JournalYearQuartile> in;
    for (int j = 0; j < 12; ++j) {
      for (int year = 2015; year <= 2020; ++year) {
        if (coin(rng))
          in.push_back(entry("J" + std::to_string(j), year, coin(rng)));
      }
    }
    const auto once = apply_recent_year_substitution(in);
    const auto twice = apply_recent_year_substitution(once);
    ASSERT_EQ(once, twice);
    ASSERT_EQ(once.size(), in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (in[i].year != 2019 && in[i].year != 2020) {
        ASSERT_EQ(once[i], in[i]);
      } else {
        ASSERT_EQ(once[i].journal_id, in[i].journal_id);
        ASSERT_EQ(once[i].median_percentile, in[i].median_percentile);
      }
    }
  }
}

TEST(Substitution, CsvLayout) {
  std::vector<JournalYearQuartile> q = {{"J", 2019, 80.5, true, 2018},
                                        {"K", 2001, std::nullopt, false, 2001}};
  std::ostringstream out;
  write_quartiles_csv(q, out);
  EXPECT_EQ(out.str(),
            "journal_id,year,median_percentile,is_q1,source_year\n"
            "J,2019,80.500000,true,2018\nK,2001,,false,2001\n");
}

}  // namespace
}  // namespace talentscope
