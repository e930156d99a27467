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

#ifndef PERMLO_POLYROOTS_WEIGHTS_HPP
#define PERMLO_POLYROOTS_WEIGHTS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "permlo/rational.hpp"
#include "permlo/stats.hpp"

namespace permlo {

/// Centered moments M_k = (1/n) sum (w_i - mean)^k, exact.
struct BalanceReport {
  Rational mean, m2, m4;
  bool degenerate = false;            // m2 == 0
  std::optional<Rational> k_achieved;  // m4 / m2^2, absent when degenerate
  Rational k_requested;

  /// m4 <= K m2^2. A degenerate vector has m4 = 0 and satisfies it trivially.
  bool balanced(const Rational& k) const { return m4 <= k * m2 * m2; }
  bool balanced() const { return balanced(k_requested); }
};

BalanceReport k_balanced_check(std::span<const Rational> w, const Rational& k);

/// Disjoint index blocks of equal size p (1-based) whose pairwise differences satisfy
/// eps / (2n) <= (w_i - w_j)^2 <= 4 K^2 / n.
struct MassSplit {
  std::vector<std::size_t> high;  // I: the p largest entries of the small-entry set
  std::vector<std::size_t> low;   // J: the p smallest
  std::size_t p = 0;
  std::size_t p_min = 0;  // floor(eps n / (32 K^2))
  Rational min_gap2, max_gap2;
};

/// Needs sum w = 0 and sum w^2 = 1 exactly (ArgumentError otherwise) and K^2 >= 2 / eps
/// (PreconditionError). Returns none when the entries with w_i^2 <= K^2 / n carry
/// less than eps of the mass, or when no block size separates.
std::optional<MassSplit> mass_split(std::span<const Rational> w, const Rational& eps, const Rational& k);

struct SamplingReport {
  std::size_t n = 0, m = 0;
  Rational c, k;
  Rational moment;  // (1/n) sum (n w_i^2)^2
  /// Frequency of |S_m - m/n| >= C m/n, S_m the mass of m entries drawn without replacement.
  ProbEstimate deviation;
  double bound = 0.0;  // K / (C^2 m)
};

/// Normalization as for mass_split; PreconditionError when the moment exceeds K.
SamplingReport sampling_moment_check(std::span<const Rational> w, std::size_t m, const Rational& c,
                                     const Rational& k, std::uint64_t trials, std::uint64_t seed,
                                     unsigned workers = 0);

}  // namespace permlo

#endif  // PERMLO_POLYROOTS_WEIGHTS_HPP
