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

#ifndef PERMLO_POLYROOTS_REAL_ROOTS_HPP
#define PERMLO_POLYROOTS_REAL_ROOTS_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "permlo/polyroots/polynomial.hpp"
#include "permlo/rational.hpp"

namespace permlo {

/// p, p', then negated pseudo-remainders reduced to primitive parts. Every element is a
/// positive multiple of the classical Sturm sequence element, so sign counts agree.
class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& p);

  const std::vector<IntPolynomial>& sequence() const { return seq_; }
  /// Sign changes of the chain at num/den (den > 0), zeros skipped.
  std::size_t variations_at(const BigInt& num, const BigInt& den) const;
  std::size_t variations_at(const Rational& x) const { return variations_at(x.get_num(), x.get_den()); }
  std::size_t variations_at_infinity(bool positive) const;
  /// The last element has positive degree exactly when p has a repeated root.
  bool squarefree() const { return seq_.back().degree() == 0; }

 private:
  std::vector<IntPolynomial> seq_;
};

enum class RootDomain { all_reals, excluding_special };

/// Distinct real roots of p; excluding_special drops any roots at -1, 0 and 1.
/// Throws ArgumentError for the zero polynomial.
std::size_t sturm_real_root_count(const IntPolynomial& p, RootDomain domain = RootDomain::all_reals);

/// Distinct real roots in the closed interval [a, b], a <= b.
std::size_t sturm_real_root_count(const IntPolynomial& p, const Rational& a, const Rational& b);

/// Distinct real roots in the open interval (a, b), a < b.
std::size_t sturm_open_interval_count(const IntPolynomial& p, const Rational& a, const Rational& b);

/// Multiplicity of the root r in {-1, 0, 1} (0 when r is not a root).
unsigned root_multiplicity(const IntPolynomial& p, long r);

/// p with every factor x, x - 1 and x + 1 divided out.
IntPolynomial deflate_special(const IntPolynomial& p);

enum class RootCounter { sturm, bisection };

/// Distinct real roots of p, split by location.
struct RealRootSplit {
  std::size_t total = 0;       // distinct real roots
  std::size_t nonspecial = 0;  // distinct real roots outside {-1, 0, 1}
  unsigned mult_zero = 0, mult_one = 0, mult_minus_one = 0;
  /// Distinct roots in (0,1), (1,inf), (-1,0), (-inf,-1).
  std::array<std::size_t, 4> regions{};
  bool squarefree = true;  // known only for RootCounter::sturm; bisection leaves it true
};

RealRootSplit split_real_roots(const IntPolynomial& p, RootCounter method = RootCounter::bisection);

/// Distinct roots in (0, 1) of a polynomial with p(0) != 0 and p(1) != 0, by Descartes
/// bisection: a certified long double pass first, exact integers when a sign is not
/// certified, Sturm when bisection depth runs out (repeated roots).
std::size_t count_unit_interval_roots(const IntPolynomial& p);

/// Telemetry for the bisection counter, accumulated per thread.
struct BisectionStats {
  std::size_t float_ok = 0, exact_fallback = 0, sturm_fallback = 0;
};
BisectionStats& bisection_stats();

}  // namespace permlo

#endif  // PERMLO_POLYROOTS_REAL_ROOTS_HPP
