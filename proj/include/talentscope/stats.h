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
#ifndef TALENTSCOPE_STATS_H_
#define TALENTSCOPE_STATS_H_

#include <span>
#include <vector>

namespace talentscope {

// Median of an unsorted sample; even sizes average the two central values.
// The span is reordered. Throws on an empty sample.
double median_inplace(std::span<double> values);
double median(std::vector<double> values);

// Linear-interpolation quantile (Hyndman & Fan type 7, the R default) of an
// ascending sample. p in [0, 1].
double quantile_sorted(std::span<const double> sorted, double p);

struct DistributionStats {
  double min = 0;
  double q1 = 0;
  double median = 0;
  double mean = 0;
  double q3 = 0;
  double max = 0;

  bool operator==(const DistributionStats&) const = default;
};

// Five-number summary plus mean. Throws on an empty sample.
DistributionStats describe(std::vector<double> values);

// Entry-wise a - b.
DistributionStats difference(const DistributionStats& a,
                             const DistributionStats& b);

// Adjusted Fisher-Pearson sample skewness; needs n >= 3.
double sample_skewness(std::span<const double> values);

}  // namespace talentscope

#endif  // TALENTSCOPE_STATS_H_
