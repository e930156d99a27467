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

#include "permlo/polyroots/polynomial.hpp"

#include <sstream>

#include "permlo/core/instance.hpp"
#include "permlo/error.hpp"
#include "permlo/rng.hpp"

namespace permlo {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  for (long x : ascending) c_.emplace_back(x);
  trim();
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int IntPolynomial::sign_at(const BigInt& num, const BigInt& den) const {
  if (c_.empty()) return 0;
  // sum_k c_k num^k den^{deg-k}
  BigInt acc = c_.back();
  BigInt den_pow = 1;
  for (std::size_t k = c_.size() - 1; k-- > 0;) {
    den_pow *= den;
    acc = acc * num + c_[k] * den_pow;
  }
  return sgn(acc);
}

IntPolynomial IntPolynomial::divide_linear(long r) const {
  detail::require(!c_.empty(), "cannot divide the zero polynomial");
  std::vector<BigInt> q(c_.size() - 1);
  BigInt carry = 0;
  for (std::size_t k = c_.size(); k-- > 1;) {
    carry = c_[k] + carry * r;
    q[k - 1] = carry;
  }
  detail::require(c_[0] + carry * r == 0, "divide_linear: not a root");
  return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!first) out << (c_[k] < 0 ? " - " : " + ");
    else if (c_[k] < 0) out << "-";
    BigInt mag = abs(c_[k]);
    if (mag != 1 || k == 0) out << mag.get_str();
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return out.str();
}

IntPolynomial derivative(const IntPolynomial& p, unsigned d) {
  if (d == 0) return p;
  const auto& c = p.coefficients();
  if (c.size() <= d) return IntPolynomial();
  std::vector<BigInt> out(c.size() - d);
  for (std::size_t k = d; k < c.size(); ++k) out[k - d] = falling_factorial(static_cast<long>(k), d) * c[k];
  return IntPolynomial(std::move(out));
}

IntPolynomial reflect(const IntPolynomial& p) {
  std::vector<BigInt> c = p.coefficients();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial reverse(const IntPolynomial& p) {
  std::vector<BigInt> c(p.coefficients().rbegin(), p.coefficients().rend());
  return IntPolynomial(std::move(c));
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt g = 0;
  for (const auto& x : p.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  std::vector<BigInt> c = p.coefficients();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

IntPolynomial perm_poly(std::span<const BigInt> w, std::span<const std::size_t> perm) {
  detail::require(!w.empty(), "weight vector is empty");
  check_permutation(perm, w.size());
  std::vector<BigInt> c(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) c[i + 1] = w[perm[i]];
  return IntPolynomial(std::move(c));
}

IntPolynomial sample_perm_poly(std::span<const BigInt> w, std::uint64_t seed, std::uint64_t trial) {
  detail::require(!w.empty(), "weight vector is empty");
  std::vector<std::size_t> perm(w.size());
  sample_permutation(std::span<std::size_t>(perm), seed, trial);
  return perm_poly(w, perm);
}

std::vector<BigInt> clear_denominators(std::span<const Rational> w) {
  detail::require(!w.empty(), "weight vector is empty");
  return common_denominator(w).numerators;
}

}  // namespace permlo
