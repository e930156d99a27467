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

#ifndef PERMLO_CORE_INSTANCE_HPP
#define PERMLO_CORE_INSTANCE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "permlo/rational.hpp"

namespace permlo {

/// Weights w and values v defining S = sum_i w_i v_{pi(i)}.
struct WeightValuePair {
  std::vector<Rational> w;
  std::vector<Rational> v;

  std::size_t n() const { return w.size(); }
};

/// Throws ArgumentError unless |w| = |v| >= 1.
WeightValuePair make_pair(std::vector<Rational> w, std::vector<Rational> v);

/// Row-major n x n array a_{ij} defining S = sum_i a_{i pi(i)}.
class SquareArray {
 public:
  SquareArray() = default;
  /// Throws ArgumentError unless rows form a square matrix with n >= 1.
  explicit SquareArray(const std::vector<std::vector<Rational>>& rows);
  SquareArray(std::size_t n, std::vector<Rational> row_major);

  /// The embedding a_{ij} = w_i v_j.
  static SquareArray from_pair(const WeightValuePair& pair);

  std::size_t n() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::span<const Rational> entries() const { return a_; }

  /// Floating view, derived once on demand.
  std::vector<double> to_double() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

/// Integer image of an array: entry(i,j) = numerator(i,j) / denominator.
struct ScaledArray {
  std::size_t n = 0;
  BigInt denominator;
  std::vector<BigInt> numerators;
  /// Present when every partial sum of n entries fits in int64 by a wide margin.
  std::optional<std::vector<std::int64_t>> small;
};

ScaledArray scale_array(const SquareArray& a);

/// Throws ArgumentError unless perm is a bijection on {0..n-1} with n = a.n().
void check_permutation(std::span<const std::size_t> perm, std::size_t n);

/// sum_i a_{i, perm(i)} with 0-based perm.
Rational sum_for_perm(const SquareArray& a, std::span<const std::size_t> perm);

/// v_i = i / n for i = 1..n.
std::vector<Rational> linear_values(std::size_t n);

/// v_i = P(i) / n^d for i = 1..n, with P given by ascending integer coefficients (degree d).
std::vector<Rational> polynomial_values(std::size_t n, std::span<const long> ascending_coeffs);

/// Uniform +-1 vector of length n with exactly (n + k)/2 entries equal to +1.
/// Throws ArgumentError unless |k| <= n and n + k is even.
std::vector<long> conditioned_rademacher(std::size_t n, long k, std::uint64_t seed);

/// The pair attaining the sharp atom bound: v = (1..n), w = (-s, -s, n+1, ..., n+1)
/// with s = (n-2)(n+1)/2. Then S = 0 exactly when v_{pi(1)} + v_{pi(2)} = n + 1.
WeightValuePair extremal_pair(std::size_t n);

/// 2 floor(n/2) / (n (n-1)).
Rational sharp_atom_bound(std::size_t n);

}  // namespace permlo

#endif  // PERMLO_CORE_INSTANCE_HPP
