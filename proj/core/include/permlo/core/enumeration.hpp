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

#ifndef PERMLO_CORE_ENUMERATION_HPP
#define PERMLO_CORE_ENUMERATION_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <span>

#include "permlo/core/instance.hpp"
#include "permlo/rational.hpp"

namespace permlo {

struct EnumerationOptions {
  /// Largest n accepted; n! permutations are visited.
  std::size_t cap = 10;
  /// 0 selects default_workers().
  unsigned workers = 0;
};

/// Hard ceiling on EnumerationOptions::cap so that every count fits in 64 bits.
inline constexpr std::size_t kMaxEnumerationCap = 20;

/// Exact law of S over all n! permutations.
struct AtomDistribution {
  std::map<Rational, BigInt> atoms;  // every count >= 1; counts sum to total
  BigInt total;

  const BigInt& max_count() const;
  /// P(S = x).
  Rational probability_at(const Rational& x) const;
};

AtomDistribution exact_atom_distribution(const SquareArray& a, const EnumerationOptions& opt = {});

/// sup_x P(S = x).
Rational exact_rho(const SquareArray& a, const EnumerationOptions& opt = {});
Rational exact_rho(const AtomDistribution& dist);

/// P(|S - center| <= radius), compared exactly.
Rational exact_small_ball(const SquareArray& a, const Rational& center, const Rational& radius,
                          const EnumerationOptions& opt = {});
Rational exact_small_ball(const AtomDistribution& dist, const Rational& center, const Rational& radius);

/// sup over all real centers of P(|S - L| <= radius), with a maximizing center.
struct SupSmallBall {
  Rational probability;
  Rational center;
};

SupSmallBall sup_small_ball(const AtomDistribution& dist, const Rational& radius);

/// Mean and variance of the distribution, exactly.
Rational distribution_mean(const AtomDistribution& dist);
Rational distribution_variance(const AtomDistribution& dist);

/// Calls visit(perm) for each of the n! permutations of {0..n-1} in lexicographic order.
void for_each_permutation(std::size_t n, const std::function<void(std::span<const std::size_t>)>& visit);

}  // namespace permlo

#endif  // PERMLO_CORE_ENUMERATION_HPP
