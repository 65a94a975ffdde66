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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "talentscope/common.h"

namespace talentscope {

double median_inplace(std::span<double> values) {
  if (values.empty()) throw Error("median of an empty sample");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + mid);
  return (lower + upper) / 2.0;
}

double median(std::vector<double> values) { return median_inplace(values); }

double quantile_sorted(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw Error("quantile of an empty sample");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = h - static_cast<double>(lo);
  if (frac == 0.0) return sorted[lo];
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

DistributionStats describe(std::vector<double> values) {
  if (values.empty()) throw Error("statistics of an empty sample");
  std::sort(values.begin(), values.end());
  DistributionStats s;
  s.min = values.front();
  s.max = values.back();
  s.q1 = quantile_sorted(values, 0.25);
  const std::size_t n = values.size();
  s.median = n % 2 == 1 ? values[n / 2]
                        : (values[n / 2 - 1] + values[n / 2]) / 2;
  s.q3 = quantile_sorted(values, 0.75);
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
  // Summation error can push the mean a hair outside a constant sample.
  s.mean = std::clamp(s.mean, s.min, s.max);
  return s;
}

DistributionStats difference(const DistributionStats& a,
                             const DistributionStats& b) {
  return {a.min - b.min,   a.q1 - b.q1, a.median - b.median,
          a.mean - b.mean, a.q3 - b.q3, a.max - b.max};
}

double sample_skewness(std::span<const double> values) {
  const auto n = static_cast<double>(values.size());
  if (values.size() < 3) throw Error("skewness needs at least three values");
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double m2 = 0, m3 = 0;
  for (double v : values) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= n;
  m3 /= n;
  if (m2 == 0) return 0;
  const double g1 = m3 / std::pow(m2, 1.5);
  return g1 * std::sqrt(n * (n - 1)) / (n - 2);
}

}  // namespace talentscope
