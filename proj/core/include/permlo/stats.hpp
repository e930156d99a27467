// Copyright 2026 The permlo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERMLO_STATS_HPP
#define PERMLO_STATS_HPP

#include <cstdint>
#include <span>
#include <utility>

namespace permlo {

/// Monte-Carlo proportion with an exact binomial interval.
struct ProbEstimate {
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  double point = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double confidence = 0.99;
  std::uint64_t seed = 0;
};

/// Two-sided Clopper-Pearson interval for hits out of trials.
std::pair<double, double> clopper_pearson(std::uint64_t hits, std::uint64_t trials, double confidence);

ProbEstimate make_estimate(std::uint64_t hits, std::uint64_t trials, double confidence, std::uint64_t seed);

/// Two-sided normal interval for a sample mean.
struct MeanEstimate {
  double mean = 0.0;
  double variance = 0.0;  // unbiased sample variance
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t samples = 0;
  double confidence = 0.99;
};

MeanEstimate estimate_mean(std::span<const double> xs, double confidence);

/// Ordinary least squares y = intercept + slope x.
struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
};

LinearFit fit_line(std::span<const double> xs, std::span<const double> ys);

}  // namespace permlo

#endif  // PERMLO_STATS_HPP
