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

#include "permlo/dio.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>

#include "permlo/error.hpp"

namespace permlo {

namespace {

// Neumaier summation in long double.
struct CompensatedSum {
  long double sum = 0, comp = 0;
  void add(long double x) {
    const long double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  long double value() const { return sum + comp; }
};

// FFTW planning is not thread safe.
std::mutex& fftw_planner_mutex() {
  static std::mutex mu;
  return mu;
}

constexpr std::size_t kDirectPairLimit = std::size_t{1} << 22;

}  // namespace

double circle_norm(double x) { return std::fabs(x - std::nearbyint(x)); }
long double circle_norm(long double x) { return std::fabs(x - std::nearbyint(x)); }

IndexSet make_index_set(std::vector<long> elements, long n) {
  detail::require(n >= 1, "index set needs n >= 1");
  detail::require(!elements.empty(), "index set is empty");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  detail::require(elements.front() >= -n && elements.back() <= n, "index set leaves {-n..n}");
  return IndexSet{std::move(elements), n};
}

IndexSet index_range(long lo, long hi, long n) {
  detail::require(lo <= hi, "empty index range");
  std::vector<long> e;
  e.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long r = lo; r <= hi; ++r) e.push_back(r);
  return make_index_set(std::move(e), n);
}

double wraparound_poly_sum(const IndexSet& I, std::span<const double> descending, double n_scale) {
  detail::require(descending.size() >= 2, "polynomial wrap-around sum needs degree d >= 1");
  detail::require(n_scale > 0, "scale must be positive");
  CompensatedSum acc;
  const long double scale = n_scale;
  for (long r : I.elements) {
    const long double x = static_cast<long double>(r);
    long double p = descending[0];
    for (std::size_t k = 1; k < descending.size(); ++k) p = p * x + static_cast<long double>(descending[k]);
    const long double e = circle_norm(p / scale);
    acc.add(e * e);
  }
  return static_cast<double>(acc.value());
}

double wraparound_sum(const IndexSet& I, double b, double b0) {
  const double c[2] = {b, b0};
  return wraparound_poly_sum(I, c, 1.0);
}

std::vector<std::uint64_t> difference_counts(const IndexSet& I) {
  const long n = I.n;
  const std::size_t width = static_cast<std::size_t>(4 * n + 1);
  std::vector<std::uint64_t> counts(width, 0);
  const std::size_t m = I.elements.size();
  if (m * m <= kDirectPairLimit) {
    for (long x : I.elements)
      for (long y : I.elements) ++counts[static_cast<std::size_t>(x - y + 2 * n)];
    return counts;
  }
  // Autocorrelation of the indicator of I + n on {0..2n}, zero padded past 4n + 1.
  const std::size_t len = static_cast<std::size_t>(2 * n + 1);
  std::size_t size = 1;
  while (size < 2 * len) size <<= 1;
  double* in = fftw_alloc_real(size);
  fftw_complex* spec = fftw_alloc_complex(size / 2 + 1);
  fftw_plan fwd, bwd;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fwd = fftw_plan_dft_r2c_1d(static_cast<int>(size), in, spec, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_1d(static_cast<int>(size), spec, in, FFTW_ESTIMATE);
  }
  std::fill(in, in + size, 0.0);
  for (long x : I.elements) in[static_cast<std::size_t>(x + n)] = 1.0;
  fftw_execute(fwd);
  for (std::size_t k = 0; k < size / 2 + 1; ++k) {
    const double re = spec[k][0], im = spec[k][1];
    spec[k][0] = re * re + im * im;
    spec[k][1] = 0.0;
  }
  fftw_execute(bwd);
  // in[s] / size counts pairs with x - y = s (mod size); negative shifts wrap to the top.
  for (long r = -2 * n; r <= 2 * n; ++r) {
    const std::size_t idx = r >= 0 ? static_cast<std::size_t>(r) : size - static_cast<std::size_t>(-r);
    counts[static_cast<std::size_t>(r + 2 * n)] = static_cast<std::uint64_t>(std::llround(in[idx] / static_cast<double>(size)));
  }
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }
  fftw_free(in);
  fftw_free(spec);
  return counts;
}

std::vector<long> common_difference_set(const IndexSet& I, std::uint64_t c_rep) {
  detail::require(c_rep >= 1, "c_rep must be at least 1");
  const auto counts = difference_counts(I);
  std::vector<long> out;
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] >= c_rep) out.push_back(static_cast<long>(k) - 2 * I.n);
  return out;
}

double normalized_exponential_sum(const IndexSet& I, std::span<const double> ascending_alpha) {
  detail::require(!ascending_alpha.empty(), "phase polynomial has no coefficients");
  CompensatedSum re, im;
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  for (long k : I.elements) {
    const long double x = static_cast<long double>(k);
    // Each term is reduced mod 1 before summing so that large k^i stay accurate.
    long double phase = 0, power = 1;
    for (double a : ascending_alpha) {
      const long double term = static_cast<long double>(a) * power;
      phase += term - std::floor(term);
      power *= x;
    }
    phase -= std::floor(phase);
    re.add(std::cos(two_pi * phase));
    im.add(std::sin(two_pi * phase));
  }
  const long double mod = std::hypot(re.value(), im.value());
  return static_cast<double>(mod / static_cast<long double>(I.n));
}

std::optional<WeylDetection> weyl_inverse_detect(const IndexSet& I, std::span<const double> ascending_alpha,
                                                 double delta, std::uint64_t q_max) {
  detail::require(delta > 0 && delta <= 1, "delta must lie in (0, 1]");
  detail::require(q_max >= 1, "q_max must be at least 1");
  const double s = normalized_exponential_sum(I, ascending_alpha);
  if (s < delta) return std::nullopt;
  const std::size_t d = ascending_alpha.size() - 1;
  const long double n = static_cast<long double>(I.n);
  auto residual = [&](std::uint64_t q, std::size_t i) {
    return static_cast<double>(circle_norm(static_cast<long double>(q) * static_cast<long double>(ascending_alpha[i])));
  };
  auto score = [&](std::uint64_t q) {
    long double best = 0, ni = 1;
    for (std::size_t i = 1; i <= d; ++i) {
      ni *= n;
      best = std::max(best, static_cast<long double>(residual(q, i)) * ni);
    }
    return static_cast<double>(best);
  };
  WeylDetection det;
  det.q = 1;
  det.score = score(1);
  for (std::uint64_t q = 2; q <= q_max; ++q) {
    const double sc = score(q);
    if (sc < det.score) {
      det.score = sc;
      det.q = q;
    }
  }
  for (std::size_t i = 0; i <= d; ++i) det.residuals.push_back(residual(det.q, i));
  det.normalized_sum = s;
  return det;
}

}  // namespace permlo
