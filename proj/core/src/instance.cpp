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

#include "permlo/core/instance.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "permlo/error.hpp"
#include "permlo/rng.hpp"

namespace permlo {

WeightValuePair make_pair(std::vector<Rational> w, std::vector<Rational> v) {
  detail::require(!w.empty(), "weight vector is empty");
  detail::require(w.size() == v.size(), "w and v have different lengths (" + std::to_string(w.size()) +
                                            " vs " + std::to_string(v.size()) + ")");
  return WeightValuePair{std::move(w), std::move(v)};
}

SquareArray::SquareArray(const std::vector<std::vector<Rational>>& rows) : n_(rows.size()) {
  detail::require(n_ >= 1, "array is empty");
  a_.reserve(n_ * n_);
  for (const auto& row : rows) {
    detail::require(row.size() == n_, "array is not square");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

SquareArray::SquareArray(std::size_t n, std::vector<Rational> row_major) : n_(n), a_(std::move(row_major)) {
  detail::require(n_ >= 1, "array is empty");
  detail::require(a_.size() == n_ * n_, "array is not square");
}

SquareArray SquareArray::from_pair(const WeightValuePair& pair) {
  detail::require(pair.w.size() == pair.v.size() && !pair.w.empty(), "malformed weight/value pair");
  const std::size_t n = pair.n();
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = pair.w[i] * pair.v[j];
  return SquareArray(n, std::move(a));
}

std::vector<double> SquareArray::to_double() const {
  std::vector<double> out(a_.size());
  for (std::size_t k = 0; k < a_.size(); ++k) out[k] = a_[k].get_d();
  return out;
}

ScaledArray scale_array(const SquareArray& a) {
  ScaledIntegers s = common_denominator(a.entries());
  ScaledArray out;
  out.n = a.n();
  out.denominator = std::move(s.denominator);
  out.numerators = std::move(s.numerators);
  // n entries below 2^62 / n keep every permutation sum, and any difference of
  // two such sums, inside int64.
  BigInt limit = (BigInt(1) << 61) / BigInt(static_cast<unsigned long>(out.n));
  out.small = narrow_to_int64(out.numerators, limit);
  return out;
}

void check_permutation(std::span<const std::size_t> perm, std::size_t n) {
  detail::require(perm.size() == n, "permutation length " + std::to_string(perm.size()) +
                                        " does not match n = " + std::to_string(n));
  std::vector<char> seen(n, 0);
  for (std::size_t p : perm) {
    detail::require(p < n && !seen[p], "not a permutation");
    seen[p] = 1;
  }
}

Rational sum_for_perm(const SquareArray& a, std::span<const std::size_t> perm) {
  check_permutation(perm, a.n());
  Rational s = 0;
  for (std::size_t i = 0; i < a.n(); ++i) s += a(i, perm[i]);
  return s;
}

std::vector<Rational> linear_values(std::size_t n) {
  detail::require(n >= 1, "n must be positive");
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = Rational(static_cast<long>(i + 1), static_cast<unsigned long>(n));
    v[i].canonicalize();
  }
  return v;
}

std::vector<Rational> polynomial_values(std::size_t n, std::span<const long> ascending_coeffs) {
  detail::require(n >= 1, "n must be positive");
  detail::require(!ascending_coeffs.empty(), "polynomial has no coefficients");
  const std::size_t d = ascending_coeffs.size() - 1;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), n, d);
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt x = static_cast<unsigned long>(i + 1);
    BigInt acc = 0;
    for (std::size_t k = ascending_coeffs.size(); k-- > 0;) acc = acc * x + ascending_coeffs[k];
    v[i] = Rational(acc, scale);
    v[i].canonicalize();
  }
  return v;
}

std::vector<long> conditioned_rademacher(std::size_t n, long k, std::uint64_t seed) {
  const long ln = static_cast<long>(n);
  detail::require(n >= 1, "n must be positive");
  detail::require(k >= -ln && k <= ln && (ln + k) % 2 == 0,
                  "conditioned Rademacher needs |k| <= n and n + k even");
  std::vector<long> w(n, -1);
  std::fill(w.begin(), w.begin() + (ln + k) / 2, 1);
  Philox rng(seed, 0);
  shuffle(std::span<long>(w), rng);
  return w;
}

WeightValuePair extremal_pair(std::size_t n) {
  detail::require(n >= 2, "extremal construction needs n >= 2");
  const long ln = static_cast<long>(n);
  std::vector<Rational> v(n), w(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<long>(i + 1);
  const long s = (ln - 2) * (ln + 1) / 2;
  for (std::size_t i = 0; i < n; ++i) w[i] = i < 2 ? -s : ln + 1;
  return make_pair(std::move(w), std::move(v));
}

Rational sharp_atom_bound(std::size_t n) {
  detail::require(n >= 2, "sharp atom bound needs n >= 2");
  Rational r(static_cast<long>(2 * (n / 2)), static_cast<unsigned long>(n * (n - 1)));
  r.canonicalize();
  return r;
}

}  // namespace permlo
