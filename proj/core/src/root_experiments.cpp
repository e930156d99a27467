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

#include "permlo/polyroots/experiments.hpp"

#include <cmath>

#include "permlo/core/enumeration.hpp"
#include "permlo/error.hpp"
#include "permlo/parallel.hpp"
#include "permlo/polyroots/descartes.hpp"
#include "permlo/polyroots/polynomial.hpp"

namespace permlo {

namespace {

void check_weights(std::span<const BigInt> w, unsigned d) {
  detail::require(!w.empty(), "empty weight vector");
  detail::require(d <= w.size(), "derivative order exceeds n");
  bool nonzero = false;
  for (const auto& x : w) nonzero = nonzero || x != 0;
  detail::require(nonzero, "all weights are zero: every sample is the zero polynomial");
}

RootSample measure(const IntPolynomial& p, std::size_t n, unsigned d, unsigned t, RootCounter method) {
  const IntPolynomial q = derivative(p, d);
  RootSample s;
  if (q.is_zero()) return s;  // d = n with w_pi(n) = 0
  const RealRootSplit split = split_real_roots(q, method);
  s.total = split.total;
  s.nonspecial = split.nonspecial;
  s.mult_zero = split.mult_zero;
  s.mult_one = split.mult_one;
  s.mult_minus_one = split.mult_minus_one;
  s.squarefree = split.squarefree;
  s.descartes_bound = descartes_bound(p, n, d, t).bound_total;
  return s;
}

}  // namespace

RootCountReport mc_expected_roots(std::span<const BigInt> w, unsigned d, std::uint64_t trials, std::uint64_t seed,
                                  const RootExperimentOptions& opt) {
  check_weights(w, d);
  detail::require(trials > 0, "trials must be positive");
  RootCountReport r;
  r.n = w.size();
  r.d = d;
  r.t = opt.t == 0 ? d + 2 : opt.t;
  r.seed = seed;

  std::vector<RootSample> samples(trials);
  const unsigned nw = resolve_workers(opt.workers, trials);
  std::vector<BisectionStats> stats(nw);
  parallel_blocks(trials, nw, [&](std::size_t begin, std::size_t end, unsigned block) {
    const BisectionStats before = bisection_stats();
    for (std::size_t k = begin; k < end; ++k) {
      samples[k] = measure(sample_perm_poly(w, seed, k), r.n, d, r.t, opt.counter);
      samples[k].trial = k;
    }
    const BisectionStats& after = bisection_stats();
    stats[block] = {after.float_ok - before.float_ok, after.exact_fallback - before.exact_fallback,
                    after.sturm_fallback - before.sturm_fallback};
  });
  for (const auto& s : stats) {
    r.counter.float_ok += s.float_ok;
    r.counter.exact_fallback += s.exact_fallback;
    r.counter.sturm_fallback += s.sturm_fallback;
  }

  std::vector<double> total(trials), nonspecial(trials);
  for (std::size_t k = 0; k < trials; ++k) {
    total[k] = static_cast<double>(samples[k].total);
    nonspecial[k] = static_cast<double>(samples[k].nonspecial);
    if (samples[k].nonspecial > samples[k].descartes_bound) ++r.descartes_violations;
  }
  r.total = estimate_mean(total, opt.confidence);
  r.nonspecial = estimate_mean(nonspecial, opt.confidence);
  r.log_n = std::log(static_cast<double>(r.n));
  if (r.n > 1) {
    r.ratio = r.total.mean / r.log_n;
    r.ratio_ci_high = r.total.ci_high / r.log_n;
  }
  if (opt.keep_samples) r.samples = std::move(samples);
  return r;
}

Rational exhaustive_expected_roots(std::span<const BigInt> w, unsigned d, std::size_t cap) {
  check_weights(w, d);
  const std::size_t n = w.size();
  if (n > cap) throw CapacityError("exhaustive root count needs n <= " + std::to_string(cap));
  BigInt sum = 0;
  for_each_permutation(n, [&](std::span<const std::size_t> perm) {
    sum += static_cast<unsigned long>(measure(perm_poly(w, perm), n, d, d + 2, RootCounter::sturm).total);
  });
  Rational mean(sum, factorial(static_cast<unsigned>(n)));
  mean.canonicalize();
  return mean;
}

}  // namespace permlo
