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

#include "permlo/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "permlo/error.hpp"

namespace permlo {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_integer_text(s)) throw ArgumentError("not an integer: '" + std::string(s) + "'");
  std::string body(s[0] == '+' ? s.substr(1) : s);
  return BigInt(body, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ArgumentError("empty rational");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt p = parse_integer(trim(s.substr(0, slash)));
    BigInt q = parse_integer(trim(s.substr(slash + 1)));
    if (q == 0) throw ArgumentError("zero denominator in '" + std::string(s) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  // Decimal with optional exponent, parsed exactly.
  std::string_view mant = s;
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mant = s.substr(0, e);
    exp10 = parse_integer(s.substr(e + 1)).get_si();
    if (std::labs(exp10) > 4096) throw ArgumentError("exponent out of range: '" + std::string(s) + "'");
  }
  std::string digits;
  bool neg = false;
  std::size_t i = 0;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    neg = mant[0] == '-';
    i = 1;
  }
  bool seen_dot = false, seen_digit = false;
  for (; i < mant.size(); ++i) {
    char c = mant[i];
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) --exp10;
    } else {
      throw ArgumentError("not a rational: '" + std::string(s) + "'");
    }
  }
  if (!seen_digit) throw ArgumentError("not a rational: '" + std::string(s) + "'");
  BigInt num(digits, 10);
  if (neg) num = -num;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  Rational r = exp10 >= 0 ? Rational(num * scale) : Rational(num, scale);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const BigInt& z) { return z.get_str(10); }

Rational rationalize(double x, const BigInt& max_denominator) {
  if (!std::isfinite(x)) throw ArgumentError("cannot rationalize a non-finite value");
  if (max_denominator < 1) throw ArgumentError("max_denominator must be positive");
  Rational exact(x);  // doubles are dyadic, so this is exact
  if (exact.get_den() <= max_denominator) return exact;
  // Best approximation from the convergents and the last semiconvergent.
  BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rational rest = exact;
  while (true) {
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    BigInt q2 = q0 + a * q1;
    if (q2 > max_denominator) {
      BigInt k = (max_denominator - q0) / q1;
      Rational semi(p0 + k * p1, q0 + k * q1);
      Rational conv(p1, q1);
      semi.canonicalize();
      conv.canonicalize();
      return abs(semi - exact) < abs(conv - exact) ? semi : conv;
    }
    BigInt p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rational frac = rest - Rational(a);
    if (frac == 0) {
      Rational r(p1, q1);
      r.canonicalize();
      return r;
    }
    rest = 1 / frac;
  }
}

double to_double(const Rational& q) { return q.get_d(); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }
BigInt abs(const BigInt& z) { return z < 0 ? BigInt(-z) : z; }

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt falling_factorial(long x, unsigned d) {
  BigInt r = 1;
  for (unsigned j = 0; j < d; ++j) r *= x - static_cast<long>(j);
  return r;
}

ScaledIntegers common_denominator(std::span<const Rational> values) {
  ScaledIntegers out;
  out.denominator = 1;
  for (const auto& v : values) mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), v.get_den_mpz_t());
  out.numerators.reserve(values.size());
  for (const auto& v : values) out.numerators.push_back(v.get_num() * (out.denominator / v.get_den()));
  return out;
}

std::optional<std::vector<std::int64_t>> narrow_to_int64(std::span<const BigInt> values,
                                                         const BigInt& limit) {
  std::vector<std::int64_t> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    if (abs(v) >= limit || !v.fits_slong_p()) return std::nullopt;
    out.push_back(v.get_si());
  }
  return out;
}

}  // namespace permlo
