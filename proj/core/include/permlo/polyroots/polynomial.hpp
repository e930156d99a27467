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

#ifndef PERMLO_POLYROOTS_POLYNOMIAL_HPP
#define PERMLO_POLYROOTS_POLYNOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "permlo/rational.hpp"

namespace permlo {

/// Dense integer polynomial, coefficients in ascending order. Trailing zeros are trimmed,
/// so the zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coefficients() const { return c_; }
  /// Coefficient of x^k, zero past the degree.
  BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }

  /// Sign of p(num/den) for den > 0, by homogenized Horner in exact integers.
  int sign_at(const BigInt& num, const BigInt& den) const;
  int sign_at(const Rational& x) const { return sign_at(x.get_num(), x.get_den()); }

  /// Exact quotient by (x - r) for an integer root r; throws ArgumentError if r is not a root.
  IntPolynomial divide_linear(long r) const;

  std::string to_string() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// d-th derivative: the coefficient of x^{k-d} is (k)_d c_k.
IntPolynomial derivative(const IntPolynomial& p, unsigned d);

/// p(-x).
IntPolynomial reflect(const IntPolynomial& p);

/// x^deg p(1/x).
IntPolynomial reverse(const IntPolynomial& p);

/// p divided by the gcd of its coefficients; coefficient signs are preserved.
IntPolynomial primitive_part(const IntPolynomial& p);

/// P(x) = sum_{i=1}^n w_{pi(i)} x^i for the permutation of trial k under seed.
IntPolynomial sample_perm_poly(std::span<const BigInt> w, std::uint64_t seed, std::uint64_t trial = 0);

/// Same polynomial for an explicit 0-based permutation (coefficient of x^{i+1} is w[perm[i]]).
IntPolynomial perm_poly(std::span<const BigInt> w, std::span<const std::size_t> perm);

/// Integer weights from rationals by clearing the common denominator; roots are unchanged.
std::vector<BigInt> clear_denominators(std::span<const Rational> w);

}  // namespace permlo

#endif  // PERMLO_POLYROOTS_POLYNOMIAL_HPP
