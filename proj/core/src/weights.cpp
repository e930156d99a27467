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

#include "permlo/polyroots/weights.hpp"

#include <algorithm>
#include <numeric>

#include "permlo/error.hpp"
#include "permlo/parallel.hpp"
#include "permlo/rng.hpp"

namespace permlo {

namespace {

void require_normalized(std::span<const Rational> w) {
  detail::require(!w.empty(), "empty weight vector");
  Rational sum = 0, sq = 0;
  for (const auto& x : w) {
    sum += x;
    sq += x * x;
  }
  detail::require(sum == 0, "weights must sum to 0");
  detail::require(sq == 1, "weights must have unit sum of squares");
}

}  // namespace

BalanceReport k_balanced_check(std::span<const Rational> w, const Rational& k) {
  detail::require(!w.empty(), "empty weight vector");
  BalanceReport r;
  r.k_requested = k;
  const Rational n(static_cast<long>(w.size()));
  for (const auto& x : w) r.mean += x;
  r.mean /= n;
  for (const auto& x : w) {
    const Rational c = x - r.mean;
    const Rational c2 = c * c;
    r.m2 += c2;
    r.m4 += c2 * c2;
  }
  r.m2 /= n;
  r.m4 /= n;
  r.degenerate = r.m2 == 0;
  if (!r.degenerate) r.k_achieved = Rational(r.m4 / (r.m2 * r.m2));
  return r;
}

std::optional<MassSplit> mass_split(std::span<const Rational> w, const Rational& eps, const Rational& k) {
  require_normalized(w);
  detail::require(eps > 0 && k > 0, "eps and K must be positive");
  if (k * k * eps < 2) throw PreconditionError("mass_split needs K^2 >= 2 / eps");
  const std::size_t n = w.size();
  const Rational nq(static_cast<long>(n));
  const Rational threshold = k * k / nq;

  std::vector<std::size_t> small;
  Rational mass = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (w[i] * w[i] <= threshold) {
      small.push_back(i);
      mass += w[i] * w[i];
    }
  if (mass < eps) return std::nullopt;
  std::stable_sort(small.begin(), small.end(), [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });

  MassSplit out;
  const Rational pm = eps * nq / (32 * k * k);
  out.p_min = static_cast<std::size_t>(BigInt(pm.get_num() / pm.get_den()).get_ui());
  const Rational need = eps / (2 * nq);
  const std::size_t s = small.size();
  std::size_t p = s / 2;
  const std::size_t p_floor = std::max<std::size_t>(out.p_min, 1);
  for (; p >= p_floor && p > 0; --p) {
    const Rational gap = w[small[p - 1]] - w[small[s - p]];
    if (gap * gap >= need) break;
  }
  if (p < p_floor || p == 0) return std::nullopt;
  out.p = p;
  out.high.assign(small.begin(), small.begin() + static_cast<std::ptrdiff_t>(p));
  out.low.assign(small.end() - static_cast<std::ptrdiff_t>(p), small.end());

  bool first = true;
  for (auto i : out.high)
    for (auto j : out.low) {
      const Rational d = w[i] - w[j];
      const Rational d2 = d * d;
      if (first || d2 < out.min_gap2) out.min_gap2 = d2;
      if (first || d2 > out.max_gap2) out.max_gap2 = d2;
      first = false;
    }
  // Both bounds follow from the construction; a failure here is a logic error.
  if (out.min_gap2 < need || out.max_gap2 > 4 * threshold)
    throw std::logic_error("mass_split separation check failed");
  for (auto& i : out.high) ++i;
  for (auto& j : out.low) ++j;
  std::sort(out.high.begin(), out.high.end());
  std::sort(out.low.begin(), out.low.end());
  return out;
}

SamplingReport sampling_moment_check(std::span<const Rational> w, std::size_t m, const Rational& c,
                                     const Rational& k, std::uint64_t trials, std::uint64_t seed,
                                     unsigned workers) {
  require_normalized(w);
  const std::size_t n = w.size();
  detail::require(m >= 1 && m <= n, "sample size must lie in [1, n]");
  detail::require(c > 0, "C must be positive");
  detail::require(trials > 0, "trials must be positive");
  SamplingReport r;
  r.n = n;
  r.m = m;
  r.c = c;
  r.k = k;
  const Rational nq(static_cast<long>(n));
  for (const auto& x : w) {
    const Rational s = nq * x * x;
    r.moment += s * s;
  }
  r.moment /= nq;
  if (r.moment > k) throw PreconditionError("fourth-moment hypothesis (1/n) sum (n w_i^2)^2 <= K fails");

  // Mass w_i^2 = sq[i] / den exactly. Event: q |n S - m den| >= p m den with C = p/q.
  std::vector<Rational> squares(n);
  for (std::size_t i = 0; i < n; ++i) squares[i] = w[i] * w[i];
  const ScaledIntegers sq = common_denominator(squares);
  const BigInt mq(static_cast<unsigned long>(m));
  const BigInt target = mq * sq.denominator;
  const BigInt rhs = c.get_num() * mq * sq.denominator;

  const unsigned nw = resolve_workers(workers, trials);
  std::vector<std::uint64_t> hits(nw, 0);
  parallel_blocks(trials, nw, [&](std::size_t begin, std::size_t end, unsigned block) {
    std::vector<std::size_t> idx(n);
    BigInt s, dev;
    for (std::size_t t = begin; t < end; ++t) {
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      Philox rng(seed, t);
      s = 0;
      // Partial Fisher-Yates: positions 0..m-1 hold a uniform ordered m-sample.
      for (std::size_t i = 0; i < m; ++i) {
        const auto j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(idx[i], idx[j]);
        s += sq.numerators[idx[i]];
      }
      dev = static_cast<unsigned long>(n) * s - target;
      if (c.get_den() * abs(dev) >= rhs) ++hits[block];
    }
  });
  const std::uint64_t total = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
  r.deviation = make_estimate(total, trials, 0.99, seed);
  r.bound = to_double(k / (c * c * mq));
  return r;
}

}  // namespace permlo
