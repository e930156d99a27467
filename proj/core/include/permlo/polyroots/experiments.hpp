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

#ifndef PERMLO_POLYROOTS_EXPERIMENTS_HPP
#define PERMLO_POLYROOTS_EXPERIMENTS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "permlo/polyroots/real_roots.hpp"
#include "permlo/rational.hpp"
#include "permlo/stats.hpp"

namespace permlo {

/// One sampled P^{(d)}. Roots are distinct real roots; multiplicities of -1, 0, 1 are
/// reported separately; squarefree is false only when a repeated root was detected.
struct RootSample {
  std::uint64_t trial = 0;
  std::size_t total = 0;
  std::size_t nonspecial = 0;
  unsigned mult_zero = 0, mult_one = 0, mult_minus_one = 0;
  std::size_t descartes_bound = 0;
  bool squarefree = true;
};

struct RootCountReport {
  std::size_t n = 0;
  unsigned d = 0;
  unsigned t = 0;
  std::uint64_t seed = 0;
  std::vector<RootSample> samples;  // empty unless keep_samples
  MeanEstimate total;               // distinct real roots
  MeanEstimate nonspecial;          // distinct real roots outside {-1, 0, 1}
  double log_n = 0.0;
  double ratio = 0.0;               // total.mean / log n
  double ratio_ci_high = 0.0;
  /// Samples where nonspecial exceeded the Descartes bound (always 0 if the bound is sound).
  std::uint64_t descartes_violations = 0;
  BisectionStats counter;
};

struct RootExperimentOptions {
  unsigned t = 0;  // 0 selects d + 2
  double confidence = 0.99;
  unsigned workers = 0;
  bool keep_samples = false;
  RootCounter counter = RootCounter::bisection;
};

/// Root statistics of P_pi^{(d)} for trials uniform permutations; trial k uses the
/// permutation of sample_perm_poly(w, seed, k), so results ignore the worker count.
RootCountReport mc_expected_roots(std::span<const BigInt> w, unsigned d, std::uint64_t trials, std::uint64_t seed,
                                  const RootExperimentOptions& opt = {});

/// Exact mean of the distinct real-root count of P_pi^{(d)} over all n! permutations.
Rational exhaustive_expected_roots(std::span<const BigInt> w, unsigned d, std::size_t cap = 10);

}  // namespace permlo

#endif  // PERMLO_POLYROOTS_EXPERIMENTS_HPP
