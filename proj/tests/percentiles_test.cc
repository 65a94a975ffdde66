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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "talentscope/synthgen.h"
#include "test_support.h"

namespace talentscope {
namespace {

using testing::build;
using testing::counting_percentiles;
using testing::make_record;

std::vector<std::int64_t> random_group(std::mt19937_64& rng, int max_n,
                                       int max_value) {
  std::uniform_int_distribution<int> size(1, max_n);
  std::uniform_int_distribution<std::int64_t> value(0, max_value);
  std::vector<std::int64_t> v(static_cast<std::size_t>(size(rng)));
  for (auto& x : v) x = value(rng);
  return v;
}

TEST(Hazen, SingleValue) {
  EXPECT_EQ(hazen_percentiles(std::vector<std::int64_t>{5}),
            std::vector<double>{50.0});
}

TEST(Hazen, DistinctValues) {
  const auto p = hazen_percentiles(std::vector<std::int64_t>{0, 1, 2, 3});
  EXPECT_EQ(p, (std::vector<double>{12.5, 37.5, 62.5, 87.5}));
}

TEST(Hazen, TiesShareMidrank) {
  const auto p = hazen_percentiles(std::vector<std::int64_t>{0, 0, 1});
  ASSERT_EQ(p.size(), 3u);
  EXPECT_DOUBLE_EQ(p[0], 100.0 / 3);
  EXPECT_DOUBLE_EQ(p[1], 100.0 / 3);
  EXPECT_DOUBLE_EQ(p[2], 250.0 / 3);
}

TEST(Hazen, EmptyGroupThrows) {
  EXPECT_THROW(hazen_percentiles(std::vector<std::int64_t>{}), Error);
}

TEST(Hazen, MatchesCountingOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto v = random_group(rng, 60, trial % 2 == 0 ? 5 : 1000);
    const auto got = hazen_percentiles(v);
    const auto want = counting_percentiles(v);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      ASSERT_NEAR(got[i], want[i], 1e-12);
    }
  }
}

TEST(Hazen, OpenIntervalAndMeanFifty) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const auto v = random_group(rng, 200, 8);
    const auto p = hazen_percentiles(v);
    const double mean = std::accumulate(p.begin(), p.end(), 0.0) /
                        static_cast<double>(p.size());
    ASSERT_NEAR(mean, 50.0, 1e-9);
    for (std::size_t i = 0; i < v.size(); ++i) {
      ASSERT_GT(p[i], 0.0);
      ASSERT_LT(p[i], 100.0);
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[i] == v[j]) ASSERT_EQ(p[i], p[j]);
        if (v[i] > v[j]) ASSERT_GT(p[i], p[j]);
      }
    }
  }
}

TEST(Hazen, PermutationEquivariant) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const auto v = random_group(rng, 50, 10);
    std::vector<std::size_t> perm(v.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::int64_t> permuted(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) permuted[i] = v[perm[i]];
    const auto p = hazen_percentiles(v);
    const auto q = hazen_percentiles(permuted);
    for (std::size_t i = 0; i < v.size(); ++i) ASSERT_EQ(q[i], p[perm[i]]);
  }
}

TEST(Hazen, InvariantUnderIncreasingTransform) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto v = random_group(rng, 50, 30);
    std::vector<std::int64_t> t(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) t[i] = 3 * v[i] * v[i] + 7;
    ASSERT_EQ(hazen_percentiles(v), hazen_percentiles(t));
  }
}

TEST(PaperPercentiles, SingletonGroupIsFifty) {
  const auto corpus =
      build({make_record("p1", 2005, "j", {1305}, {"a"}, {}, 40)});
  const auto table = compute_paper_percentiles(corpus);
  ASSERT_EQ(table.size(), 1u);
  EXPECT_EQ(table.rows()[0].percentile, 50.0);
}

TEST(PaperPercentiles, FieldsAreIndependentGroups) {
  const auto corpus = build({
      make_record("p1", 2005, "j1", {1305, 1600}, {"a"}, {}, 10),
      make_record("p2", 2005, "j2", {1305}, {"b"}, {}, 1),
      make_record("p3", 2005, "j3", {1600}, {"c"}, {}, 50),
      make_record("p4", 2005, "j4", {1600}, {"c"}, {}, 60),
      make_record("p5", 2005, "j5", {1203}, {"d"}, {}, 99),
  });
  const auto table = compute_paper_percentiles(corpus);
  std::map<std::pair<std::string, int>, double> by_key;
  for (const auto& row : table.rows()) {
    by_key[{row.pub_id, row.field.code}] = row.percentile;
  }
  EXPECT_EQ(by_key.size(), 5u);
  EXPECT_EQ(by_key.at({"p1", 13}), 75.0);
  EXPECT_NEAR(by_key.at({"p1", 16}), 100.0 / 6, 1e-12);
  EXPECT_EQ(by_key.count({"p5", 12}), 0u);
  const auto of_p1 = table.of_record(0);
  ASSERT_EQ(of_p1.size(), 2u);
  EXPECT_EQ(of_p1[0], 75.0);
}

TEST(PaperPercentiles, SyntheticGroupsMatchOracle) {
  SynthConfig config;
  config.seed = 7;
  config.n_authors = 70;
  const auto corpus = build(generate(config));
  ASSERT_GE(corpus.size(), 1000u);
  const auto table = compute_paper_percentiles(corpus);

  std::map<std::pair<int, int>, std::vector<std::size_t>> rows_by_group;
  for (std::size_t i = 0; i < table.rows().size(); ++i) {
    const auto& row = table.rows()[i];
    rows_by_group[{row.field.code, row.year}].push_back(i);
  }
  std::map<std::string, std::int64_t> citations;
  for (const auto& rec : corpus.records()) {
    citations[rec.pub_id] = rec.citation_count;
  }
  ASSERT_EQ(rows_by_group.size(), corpus.field_year_groups().size());
  for (const auto& [key, idx] : rows_by_group) {
    std::vector<std::int64_t> values;
    for (auto i : idx) values.push_back(citations.at(table.rows()[i].pub_id));
    const auto oracle = counting_percentiles(values);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      ASSERT_EQ(table.rows()[idx[k]].percentile, oracle[k]);
    }
  }
  for (std::size_t i = 1; i < table.rows().size(); ++i) {
    const auto& a = table.rows()[i - 1];
    const auto& b = table.rows()[i];
    ASSERT_LT(std::tie(a.field, a.year, a.pub_id),
              std::tie(b.field, b.year, b.pub_id));
  }
}

TEST(PaperPercentiles, CsvLayout) {
  const auto corpus = build({
      make_record("p1", 2005, "j", {1305}, {"a"}, {}, 1),
      make_record("p2", 2005, "j", {1305}, {"a"}, {}, 2),
  });
  std::ostringstream out;
  write_percentiles_csv(compute_paper_percentiles(corpus), out);
  EXPECT_EQ(out.str(),
            "pub_id,field,year,percentile\np1,13,2005,25.000000\n"
            "p2,13,2005,75.000000\n");
}

}  // namespace
}  // namespace talentscope
