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

#include "permlo/core/monte_carlo.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "permlo/error.hpp"
#include "permlo/parallel.hpp"
#include "permlo/rng.hpp"

namespace permlo {

namespace {

// Runs per_trial(perm, counts) for every trial and returns the summed counts.
// Counts are integers, so the block split cannot change the result.
template <class F>
std::vector<std::uint64_t> count_trials(std::size_t n, std::size_t slots, std::uint64_t trials, std::uint64_t seed,
                                        unsigned workers, F per_trial) {
  workers = resolve_workers(workers, static_cast<std::size_t>(trials));
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(slots, 0));
  parallel_blocks(static_cast<std::size_t>(trials), workers, [&](std::size_t begin, std::size_t end, unsigned b) {
    std::vector<std::uint32_t> perm(n);
    auto& counts = partial[b];
    for (std::size_t t = begin; t < end; ++t) {
      sample_permutation(std::span<std::uint32_t>(perm), seed, t);
      per_trial(perm, counts);
    }
  });
  std::vector<std::uint64_t> total(slots, 0);
  for (const auto& p : partial)
    for (std::size_t k = 0; k < slots; ++k) total[k] += p[k];
  return total;
}

// An instance, center and radius brought to one integer scale.
struct ScaledBall {
  std::size_t n = 0;
  std::vector<BigInt> a;
  BigInt center, radius;
  std::vector<std::int64_t> a64;
  std::int64_t center64 = 0, radius64 = 0;
  bool small = false;
};

ScaledBall scale_ball(const SquareArray& arr, const Rational& center, const Rational& radius) {
  std::vector<Rational> all(arr.entries().begin(), arr.entries().end());
  all.push_back(center);
  all.push_back(radius);
  ScaledIntegers s = common_denominator(all);
  ScaledBall b;
  b.n = arr.n();
  b.radius = s.numerators.back();
  s.numerators.pop_back();
  b.center = s.numerators.back();
  s.numerators.pop_back();
  b.a = std::move(s.numerators);
  BigInt limit = (BigInt(1) << 60) / BigInt(static_cast<unsigned long>(b.n + 2));
  std::vector<BigInt> probe = b.a;
  probe.push_back(b.center);
  probe.push_back(b.radius);
  if (auto narrow = narrow_to_int64(probe, limit)) {
    b.small = true;
    b.radius64 = narrow->back();
    narrow->pop_back();
    b.center64 = narrow->back();
    narrow->pop_back();
    b.a64 = std::move(*narrow);
  }
  return b;
}

bool in_ball(const ScaledBall& b, std::span<const std::uint32_t> perm) {
  const std::size_t n = b.n;
  if (b.small) {
    std::int64_t s = -b.center64;
    for (std::size_t i = 0; i < n; ++i) s += b.a64[i * n + perm[i]];
    return (s < 0 ? -s : s) <= b.radius64;
  }
  BigInt s = -b.center;
  for (std::size_t i = 0; i < n; ++i) s += b.a[i * n + perm[i]];
  return abs(s) <= b.radius;
}

void check_trials(std::uint64_t trials) { detail::require(trials >= 1, "trials must be positive"); }

double real_sum(std::span<const double> w, std::span<const double> v, std::span<const std::uint32_t> perm) {
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * v[perm[i]];
  return s;
}

}  // namespace

ProbEstimate mc_small_ball(const SquareArray& a, const Rational& center, const Rational& radius, std::uint64_t trials,
                           std::uint64_t seed, const McOptions& opt) {
  check_trials(trials);
  detail::require(radius >= 0, "radius must be nonnegative");
  const ScaledBall b = scale_ball(a, center, radius);
  auto counts = count_trials(a.n(), 1, trials, seed, opt.workers,
                             [&](std::span<const std::uint32_t> perm, std::vector<std::uint64_t>& c) {
                               c[0] += in_ball(b, perm);
                             });
  return make_estimate(counts[0], trials, opt.confidence, seed);
}

JointEstimate mc_joint_report(const SquareArray& a1, const SquareArray& a2, const Rational& center1,
                              const Rational& center2, const Rational& radius1, const Rational& radius2,
                              std::uint64_t trials, std::uint64_t seed, const McOptions& opt) {
  check_trials(trials);
  detail::require(a1.n() == a2.n(), "joint estimate needs instances of equal size (" + std::to_string(a1.n()) +
                                        " vs " + std::to_string(a2.n()) + ")");
  detail::require(radius1 >= 0 && radius2 >= 0, "radius must be nonnegative");
  const ScaledBall b1 = scale_ball(a1, center1, radius1);
  const ScaledBall b2 = scale_ball(a2, center2, radius2);
  auto counts = count_trials(a1.n(), 3, trials, seed, opt.workers,
                             [&](std::span<const std::uint32_t> perm, std::vector<std::uint64_t>& c) {
                               bool e1 = in_ball(b1, perm);
                               bool e2 = in_ball(b2, perm);
                               c[0] += e1 && e2;
                               c[1] += e1;
                               c[2] += e2;
                             });
  return JointEstimate{make_estimate(counts[0], trials, opt.confidence, seed),
                       make_estimate(counts[1], trials, opt.confidence, seed),
                       make_estimate(counts[2], trials, opt.confidence, seed)};
}

ProbEstimate mc_joint_small_ball(const SquareArray& a1, const SquareArray& a2, const Rational& center1,
                                 const Rational& center2, const Rational& radius1, const Rational& radius2,
                                 std::uint64_t trials, std::uint64_t seed, const McOptions& opt) {
  return mc_joint_report(a1, a2, center1, center2, radius1, radius2, trials, seed, opt).joint;
}

RealPair to_real(const WeightValuePair& p) {
  RealPair r;
  r.w.reserve(p.n());
  r.v.reserve(p.n());
  for (const auto& x : p.w) r.w.push_back(x.get_d());
  for (const auto& x : p.v) r.v.push_back(x.get_d());
  return r;
}

std::vector<ProbEstimate> mc_small_ball_grid(const RealPair& p, std::span<const double> centers, double radius,
                                             std::uint64_t trials, std::uint64_t seed, const McOptions& opt) {
  check_trials(trials);
  detail::require(!p.w.empty() && p.w.size() == p.v.size(), "malformed real pair");
  detail::require(radius >= 0, "radius must be nonnegative");
  auto counts = count_trials(p.n(), centers.size(), trials, seed, opt.workers,
                             [&](std::span<const std::uint32_t> perm, std::vector<std::uint64_t>& c) {
                               const double s = real_sum(p.w, p.v, perm);
                               for (std::size_t k = 0; k < centers.size(); ++k) c[k] += std::fabs(s - centers[k]) <= radius;
                             });
  std::vector<ProbEstimate> out;
  out.reserve(centers.size());
  for (auto h : counts) out.push_back(make_estimate(h, trials, opt.confidence, seed));
  return out;
}

std::vector<ProbEstimate> mc_tail_grid(const RealPair& p, double center, std::span<const double> thresholds,
                                       std::uint64_t trials, std::uint64_t seed, const McOptions& opt) {
  check_trials(trials);
  detail::require(!p.w.empty() && p.w.size() == p.v.size(), "malformed real pair");
  auto counts = count_trials(p.n(), thresholds.size(), trials, seed, opt.workers,
                             [&](std::span<const std::uint32_t> perm, std::vector<std::uint64_t>& c) {
                               const double dev = std::fabs(real_sum(p.w, p.v, perm) - center);
                               for (std::size_t k = 0; k < thresholds.size(); ++k) c[k] += dev >= thresholds[k];
                             });
  std::vector<ProbEstimate> out;
  out.reserve(thresholds.size());
  for (auto h : counts) out.push_back(make_estimate(h, trials, opt.confidence, seed));
  return out;
}

JointGrid mc_joint_grid(std::span<const double> w, std::span<const double> v1, std::span<const double> v2,
                        std::span<const double> centers1, std::span<const double> centers2, double radius1,
                        double radius2, std::uint64_t trials, std::uint64_t seed, const McOptions& opt) {
  check_trials(trials);
  const std::size_t n = w.size();
  detail::require(n >= 1 && v1.size() == n && v2.size() == n, "joint grid needs w, v1, v2 of equal length");
  detail::require(radius1 >= 0 && radius2 >= 0, "radius must be nonnegative");
  const std::size_t n1 = centers1.size(), n2 = centers2.size();
  const std::size_t slots = n1 * n2 + n1 + n2 + 1;
  const double inv_n = 1.0 / static_cast<double>(n);
  auto counts = count_trials(n, slots, trials, seed, opt.workers,
                             [&](std::span<const std::uint32_t> perm, std::vector<std::uint64_t>& c) {
                               const double s1 = real_sum(w, v1, perm);
                               const double s2 = real_sum(w, v2, perm);
                               for (std::size_t i = 0; i < n1; ++i) {
                                 if (std::fabs(s1 - centers1[i]) > radius1) continue;
                                 ++c[n1 * n2 + i];
                                 for (std::size_t j = 0; j < n2; ++j)
                                   c[i * n2 + j] += std::fabs(s2 - centers2[j]) <= radius2;
                               }
                               for (std::size_t j = 0; j < n2; ++j)
                                 c[n1 * n2 + n1 + j] += std::fabs(s2 - centers2[j]) <= radius2;
                               c[slots - 1] += std::fabs(s1) <= std::fabs(s2) * inv_n;
                             });
  JointGrid g;
  for (std::size_t k = 0; k < n1 * n2; ++k) g.joint.push_back(make_estimate(counts[k], trials, opt.confidence, seed));
  for (std::size_t i = 0; i < n1; ++i)
    g.first.push_back(make_estimate(counts[n1 * n2 + i], trials, opt.confidence, seed));
  for (std::size_t j = 0; j < n2; ++j)
    g.second.push_back(make_estimate(counts[n1 * n2 + n1 + j], trials, opt.confidence, seed));
  g.comparison = make_estimate(counts[slots - 1], trials, opt.confidence, seed);
  return g;
}

}  // namespace permlo
