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

#include "permlo/stats.hpp"

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/normal.hpp>
#include <cmath>

#include "permlo/error.hpp"

namespace permlo {

std::pair<double, double> clopper_pearson(std::uint64_t hits, std::uint64_t trials, double confidence) {
  detail::require(trials >= 1, "clopper_pearson: trials must be positive");
  detail::require(hits <= trials, "clopper_pearson: hits exceed trials");
  detail::require(confidence > 0.0 && confidence < 1.0, "clopper_pearson: confidence must be in (0,1)");
  const double alpha = 1.0 - confidence;
  const auto k = static_cast<double>(hits);
  const auto n = static_cast<double>(trials);
  double lo = 0.0, hi = 1.0;
  if (hits > 0) lo = boost::math::ibeta_inv(k, n - k + 1.0, alpha / 2.0);
  if (hits < trials) hi = boost::math::ibeta_inv(k + 1.0, n - k, 1.0 - alpha / 2.0);
  return {lo, hi};
}

ProbEstimate make_estimate(std::uint64_t hits, std::uint64_t trials, double confidence, std::uint64_t seed) {
  ProbEstimate e;
  e.hits = hits;
  e.trials = trials;
  e.point = static_cast<double>(hits) / static_cast<double>(trials);
  auto [lo, hi] = clopper_pearson(hits, trials, confidence);
  // ibeta_inv is accurate to a few ulps; keep the point inside its own interval.
  e.ci_low = std::fmin(lo, e.point);
  e.ci_high = std::fmax(hi, e.point);
  e.confidence = confidence;
  e.seed = seed;
  return e;
}

MeanEstimate estimate_mean(std::span<const double> xs, double confidence) {
  detail::require(!xs.empty(), "estimate_mean: no samples");
  MeanEstimate m;
  m.samples = xs.size();
  m.confidence = confidence;
  // Welford update in index order.
  double mean = 0.0, m2 = 0.0;
  std::size_t k = 0;
  for (double x : xs) {
    ++k;
    double d = x - mean;
    mean += d / static_cast<double>(k);
    m2 += d * (x - mean);
  }
  m.mean = mean;
  m.variance = xs.size() > 1 ? m2 / static_cast<double>(xs.size() - 1) : 0.0;
  const double z = boost::math::quantile(boost::math::normal(), 0.5 + confidence / 2.0);
  const double half = z * std::sqrt(m.variance / static_cast<double>(xs.size()));
  m.ci_low = mean - half;
  m.ci_high = mean + half;
  return m;
}

LinearFit fit_line(std::span<const double> xs, std::span<const double> ys) {
  detail::require(xs.size() == ys.size(), "fit_line: length mismatch");
  detail::require(xs.size() >= 2, "fit_line: need at least two points");
  const auto n = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  detail::require(sxx > 0, "fit_line: abscissae are all equal");
  LinearFit f;
  f.points = xs.size();
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return f;
}

}  // namespace permlo
