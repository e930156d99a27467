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

#ifndef PERMLO_GAP_HPP
#define PERMLO_GAP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "permlo/core/instance.hpp"
#include "permlo/rational.hpp"

namespace permlo {

/// {g0 + m_1 g_1 + ... + m_r g_r : lower_i <= m_i <= upper_i}.
struct Gap {
  Rational g0;
  std::vector<Rational> generators;
  std::vector<std::pair<long, long>> dims;  // (lower_i, upper_i), lower_i <= upper_i

  std::size_t rank() const { return generators.size(); }
  /// g0 = 0 and lower_i = -upper_i for every i.
  bool symmetric() const;
  /// prod_i (upper_i - lower_i + 1).
  BigInt volume() const;
};

/// Throws ArgumentError on mismatched lengths or lower_i > upper_i.
Gap make_gap(Rational g0, std::vector<Rational> generators, std::vector<std::pair<long, long>> dims);

/// {sum m_i g_i : |m_i| <= bounds_i}.
Gap symmetric_gap(std::vector<Rational> generators, std::span<const long> bounds);

struct GapOptions {
  std::uint64_t cap = 1'000'000;  // largest volume that may be enumerated
};

/// Distinct represented values with their representation counts.
std::map<Rational, std::uint64_t> gap_enumerate(const Gap& q, const GapOptions& opt = {});

/// Every element has a unique representation.
bool is_proper(const Gap& q, const GapOptions& opt = {});

/// The dilate with g0 scaled by k and every bound scaled by k.
Gap gap_dilate(const Gap& q, long k);

/// Some point of Q lies within distance alpha of x. Rank 0 and 1 never enumerate.
bool gap_contains(const Gap& q, const Rational& x, const Rational& alpha, const GapOptions& opt = {});

struct CoverageReport {
  std::uint64_t covered = 0;
  std::uint64_t total = 0;
  Rational fraction;
  Rational alpha;
};

struct CoverageOptions {
  GapOptions gap;
  std::size_t max_n = 200;
  /// Restrict to i != j and k != l; total becomes (n (n-1))^2.
  bool nondegenerate_only = false;
  unsigned workers = 0;
};

/// Counts ordered quadruples whose difference a_ik - a_jk - a_il + a_jl lies within alpha of Q.
CoverageReport quadruple_coverage(const SquareArray& a, const Gap& q, const Rational& alpha,
                                  const CoverageOptions& opt = {});

/// Same count for the products (w_i - w_j)(v_k - v_l), grouped by distinct differences.
CoverageReport quadruple_coverage(const WeightValuePair& p, const Gap& q, const Rational& alpha,
                                  const CoverageOptions& opt = {});

/// Lower bound on sup_x P(S = x) when every quadruple difference lies in the proper
/// symmetric GAP Q: (1 - 16 r / C^2) / ((3C)^r n^{r/2} prod_i N_i), or 0 when the
/// numerator is not positive. Throws PreconditionError when coverage at alpha = 0 is
/// incomplete or Q is not symmetric.
double gap_pigeonhole_bound(const SquareArray& a, const Gap& q, double c_cheb, const CoverageOptions& opt = {});

/// Smallest symmetric rank-1 GAP {m g : |m| <= N} containing values, if N <= max_size.
/// g is the gcd of the numerators over the common denominator. All-zero input gives rank 0.
std::optional<Gap> fit_rank1_gap(std::span<const Rational> values, long max_size);

}  // namespace permlo

#endif  // PERMLO_GAP_HPP
