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
#include "talentscope/stats.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "talentscope/common.h"

namespace talentscope {
namespace {

double sort_median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

TEST(Median, OddAndEven) {
  EXPECT_DOUBLE_EQ(median({10, 50, 90}), 50);
  EXPECT_DOUBLE_EQ(median({10, 20, 80, 90, 95}), 80);
  EXPECT_DOUBLE_EQ(median({74.0, 75.98}), 74.99);
  EXPECT_DOUBLE_EQ(median({75.0, 75.0}), 75.0);
  EXPECT_THROW(median({}), Error);
}

TEST(Median, MatchesSortOracle) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> value(0, 100);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> v(1 + trial % 40);
    for (auto& x : v) x = std::floor(value(rng));
    ASSERT_EQ(median(v), sort_median(v));
  }
}

TEST(Quantile, TypeSeven) {
  const std::vector<double> v{1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(quantile_sorted(v, 0.25), 1.75);
  EXPECT_DOUBLE_EQ(quantile_sorted(v, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(quantile_sorted(v, 0.75), 3.25);
  EXPECT_DOUBLE_EQ(quantile_sorted(v, 0.0), 1);
  EXPECT_DOUBLE_EQ(quantile_sorted(v, 1.0), 4);
  const std::vector<double> one{7};
  EXPECT_DOUBLE_EQ(quantile_sorted(one, 0.25), 7);
}

TEST(Describe, OrderingHolds) {
  std::mt19937_64 rng(2);
  std::lognormal_distribution<double> value(1, 1.2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(1 + trial % 25);
    for (auto& x : v) x = value(rng);
    const auto s = describe(v);
    ASSERT_LE(s.min, s.q1);
    ASSERT_LE(s.q1, s.median);
    ASSERT_LE(s.median, s.q3);
    ASSERT_LE(s.q3, s.max);
    ASSERT_GE(s.mean, s.min);
    ASSERT_LE(s.mean, s.max);
    ASSERT_EQ(s.median, sort_median(v));
  }
  EXPECT_THROW(describe({}), Error);
}

TEST(Describe, DifferenceIsEntryWise) {
  const auto a = describe({1, 17, 36, 66, 1070});
  const auto b = describe({1, 4, 10, 24, 760});
  const auto d = difference(a, b);
  EXPECT_EQ(d.min, a.min - b.min);
  EXPECT_EQ(d.q1, a.q1 - b.q1);
  EXPECT_EQ(d.median, a.median - b.median);
  EXPECT_EQ(d.mean, a.mean - b.mean);
  EXPECT_EQ(d.q3, a.q3 - b.q3);
  EXPECT_EQ(d.max, a.max - b.max);
}

TEST(Skewness, SignFollowsTail) {
  EXPECT_NEAR(sample_skewness(std::vector<double>{1, 2, 3, 4, 5}), 0, 1e-12);
  EXPECT_GT(sample_skewness(std::vector<double>{0, 0, 0, 1, 1, 2, 50}), 1);
  EXPECT_LT(sample_skewness(std::vector<double>{-50, 0, 0, 1, 1, 2}), 0);
}

}  // namespace
}  // namespace talentscope
