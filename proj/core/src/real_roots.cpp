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

#include "permlo/polyroots/real_roots.hpp"

#include <cfloat>
#include <climits>
#include <cmath>
#include <optional>
#include <utility>

#include "permlo/error.hpp"

namespace permlo {

namespace {

int sign_of(const BigInt& x) { return sgn(x); }

// a = q b + r up to a leading-coefficient power: returns r with lc(b)^e a = q b + r,
// and whether lc(b)^e is negative.
std::pair<IntPolynomial, bool> pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const BigInt& lcb = bc.back();
  std::size_t steps = 0;
  while (!r.empty() && r.size() - 1 >= db) {
    const BigInt lr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& x : r) x *= lcb;
    for (std::size_t k = 0; k <= db; ++k) r[k + shift] -= lr * bc[k];
    while (!r.empty() && r.back() == 0) r.pop_back();
    ++steps;
  }
  const bool negative = lcb < 0 && steps % 2 == 1;
  return {IntPolynomial(std::move(r)), negative};
}

std::size_t count_variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::size_t count_variations(const std::vector<BigInt>& c) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& x : c) {
    const int s = sign_of(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// ---- exact Descartes bisection on (0, 1) ----

void taylor_shift(std::vector<BigInt>& c) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) c[j] += c[j + 1];
}

void remove_two_content(std::vector<BigInt>& c) {
  mp_bitcnt_t shift = ~mp_bitcnt_t{0};
  for (const auto& x : c)
    if (x != 0) shift = std::min(shift, mpz_scan1(x.get_mpz_t(), 0));
  if (shift == 0 || shift == ~mp_bitcnt_t{0}) return;
  for (auto& x : c) mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), shift);
}

constexpr int kExactDepth = 64;

std::optional<std::size_t> exact_bisection(const std::vector<BigInt>& start) {
  struct Node {
    std::vector<BigInt> c;
    int depth;
  };
  std::vector<Node> stack;
  stack.push_back({start, 0});
  std::size_t roots = 0;
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    auto& c = node.c;
    if (c.size() <= 1) continue;
    std::vector<BigInt> t(c.rbegin(), c.rend());
    taylor_shift(t);
    const std::size_t var = count_variations(t);
    if (var == 0) continue;
    if (var == 1) {
      ++roots;
      continue;
    }
    if (node.depth >= kExactDepth) return std::nullopt;
    // left = 2^N c(x/2), right = left(x + 1)
    const std::size_t deg = c.size() - 1;
    std::vector<BigInt> left(c.size());
    for (std::size_t k = 0; k <= deg; ++k) mpz_mul_2exp(left[k].get_mpz_t(), c[k].get_mpz_t(), deg - k);
    remove_two_content(left);
    std::vector<BigInt> right = left;
    taylor_shift(right);
    if (right[0] == 0) {
      // Root at the midpoint: count it and divide it out of both halves.
      ++roots;
      right.erase(right.begin());
      IntPolynomial l = IntPolynomial(left).divide_linear(1);
      left = l.coefficients();
    }
    stack.push_back({std::move(right), node.depth + 1});
    stack.push_back({std::move(left), node.depth + 1});
  }
  return roots;
}

// ---- certified long double Descartes bisection ----

struct FloatPoly {
  std::vector<long double> c;  // value
  std::vector<long double> e;  // |c - exact| <= e, on the same positive scale
};

constexpr long double kEps = LDBL_EPSILON;  // twice the unit roundoff
constexpr int kFloatDepth = 40;

bool to_float(const IntPolynomial& p, FloatPoly& out) {
  const auto& c = p.coefficients();
  out.c.resize(c.size());
  out.e.assign(c.size(), 0.0L);
  long exp_max = LONG_MIN;
  std::vector<std::pair<double, long>> parts(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    long ex = 0;
    const double m = mpz_get_d_2exp(&ex, c[k].get_mpz_t());
    parts[k] = {m, ex};
    if (m != 0.0) exp_max = std::max(exp_max, ex);
  }
  if (exp_max == LONG_MIN) return false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].fits_slong_p()) {
      out.c[k] = std::ldexp(static_cast<long double>(c[k].get_si()), static_cast<int>(-exp_max));
    } else {
      // mpz_get_d_2exp truncates to 53 bits.
      out.c[k] = std::ldexp(static_cast<long double>(parts[k].first), static_cast<int>(parts[k].second - exp_max));
      out.e[k] = std::fabs(out.c[k]) * 0x1.0p-52L;
    }
  }
  return true;
}

void float_shift(FloatPoly& p) {
  auto& c = p.c;
  auto& e = p.e;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) {
      c[j] += c[j + 1];
      e[j] += e[j + 1] + kEps * std::fabs(c[j]);
    }
}

// Sign of each coefficient, or nullopt when some sign is not certified.
std::optional<std::size_t> certified_variations(const FloatPoly& p) {
  std::vector<int> signs(p.c.size());
  for (std::size_t k = 0; k < p.c.size(); ++k) {
    const long double v = p.c[k], err = p.e[k];
    if (err == 0.0L) {
      signs[k] = (v > 0) - (v < 0);
    } else if (std::fabs(v) > err * (1.0L + 1e-9L)) {
      signs[k] = v > 0 ? 1 : -1;
    } else {
      return std::nullopt;
    }
  }
  return count_variations(signs);
}

bool renormalize(FloatPoly& p) {
  long double top = 0;
  for (auto x : p.c) top = std::max(top, std::fabs(x));
  if (top == 0) return false;
  int ex = 0;
  std::frexp(top, &ex);
  for (std::size_t k = 0; k < p.c.size(); ++k) {
    p.c[k] = std::ldexp(p.c[k], -ex);
    p.e[k] = std::ldexp(p.e[k], -ex);
    // Subnormal values would lose the relative accuracy the bounds assume.
    if (p.c[k] != 0 && std::fabs(p.c[k]) < LDBL_MIN * 0x1.0p64L) return false;
  }
  return true;
}

std::optional<std::size_t> float_bisection(const IntPolynomial& start) {
  FloatPoly root_poly;
  if (!to_float(start, root_poly)) return std::nullopt;
  struct Node {
    FloatPoly p;
    int depth;
  };
  std::vector<Node> stack;
  stack.push_back({std::move(root_poly), 0});
  std::size_t roots = 0;
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    FloatPoly t{{node.p.c.rbegin(), node.p.c.rend()}, {node.p.e.rbegin(), node.p.e.rend()}};
    float_shift(t);
    const auto var = certified_variations(t);
    if (!var) return std::nullopt;
    if (*var == 0) continue;
    if (*var == 1) {
      ++roots;
      continue;
    }
    if (node.depth >= kFloatDepth) return std::nullopt;
    FloatPoly left = std::move(node.p);
    for (std::size_t k = 0; k < left.c.size(); ++k) {
      left.c[k] = std::ldexp(left.c[k], -static_cast<int>(k));
      left.e[k] = std::ldexp(left.e[k], -static_cast<int>(k));
    }
    if (!renormalize(left)) return std::nullopt;
    FloatPoly right = left;
    float_shift(right);
    // right(0) = left(1) must be certified nonzero: no root at the midpoint.
    if (!(std::fabs(right.c[0]) > right.e[0] * (1.0L + 1e-9L)) || right.c[0] == 0) return std::nullopt;
    if (!renormalize(right)) return std::nullopt;
    stack.push_back({std::move(right), node.depth + 1});
    stack.push_back({std::move(left), node.depth + 1});
  }
  return roots;
}

}  // namespace

SturmChain::SturmChain(const IntPolynomial& p) {
  detail::require(!p.is_zero(), "Sturm chain of the zero polynomial");
  seq_.push_back(primitive_part(p));
  IntPolynomial dp = derivative(p, 1);
  if (dp.is_zero()) return;
  seq_.push_back(primitive_part(dp));
  while (true) {
    auto [r, negative] = pseudo_remainder(seq_[seq_.size() - 2], seq_.back());
    if (r.is_zero()) break;
    // The chain wants -rem; rem = r / lc^e, so -rem is a positive multiple of -r or r.
    std::vector<BigInt> c = r.coefficients();
    if (!negative)
      for (auto& x : c) x = -x;
    seq_.push_back(primitive_part(IntPolynomial(std::move(c))));
  }
}

std::size_t SturmChain::variations_at(const BigInt& num, const BigInt& den) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& q : seq_) signs.push_back(q.sign_at(num, den));
  return count_variations(signs);
}

std::size_t SturmChain::variations_at_infinity(bool positive) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& q : seq_) {
    int s = sign_of(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

unsigned root_multiplicity(const IntPolynomial& p, long r) {
  detail::require(!p.is_zero(), "root multiplicity of the zero polynomial");
  unsigned m = 0;
  IntPolynomial q = p;
  while (q.degree() >= 1 && q.sign_at(BigInt(r), BigInt(1)) == 0) {
    q = q.divide_linear(r);
    ++m;
  }
  return m;
}

IntPolynomial deflate_special(const IntPolynomial& p) {
  detail::require(!p.is_zero(), "deflating the zero polynomial");
  IntPolynomial q = p;
  for (long r : {0L, 1L, -1L})
    while (q.degree() >= 1 && q.sign_at(BigInt(r), BigInt(1)) == 0) q = q.divide_linear(r);
  return q;
}

std::size_t sturm_real_root_count(const IntPolynomial& p, RootDomain domain) {
  detail::require(!p.is_zero(), "root count of the zero polynomial");
  if (p.degree() == 0) return 0;
  const SturmChain chain(p);
  std::size_t total = chain.variations_at_infinity(false) - chain.variations_at_infinity(true);
  if (domain == RootDomain::excluding_special)
    for (long r : {0L, 1L, -1L})
      if (p.sign_at(BigInt(r), BigInt(1)) == 0) --total;
  return total;
}

std::size_t sturm_real_root_count(const IntPolynomial& p, const Rational& a, const Rational& b) {
  detail::require(!p.is_zero(), "root count of the zero polynomial");
  detail::require(a <= b, "interval needs a <= b");
  const std::size_t at_a = p.sign_at(a) == 0 ? 1 : 0;
  if (a == b || p.degree() == 0) return at_a;
  const SturmChain chain(p);
  return chain.variations_at(a) - chain.variations_at(b) + at_a;
}

std::size_t sturm_open_interval_count(const IntPolynomial& p, const Rational& a, const Rational& b) {
  detail::require(!p.is_zero(), "root count of the zero polynomial");
  detail::require(a < b, "open interval needs a < b");
  if (p.degree() == 0) return 0;
  const SturmChain chain(p);
  const std::size_t at_b = p.sign_at(b) == 0 ? 1 : 0;
  return chain.variations_at(a) - chain.variations_at(b) - at_b;
}

BisectionStats& bisection_stats() {
  thread_local BisectionStats stats;
  return stats;
}

std::size_t count_unit_interval_roots(const IntPolynomial& p) {
  detail::require(!p.is_zero(), "root count of the zero polynomial");
  detail::require(p.sign_at(BigInt(0), BigInt(1)) != 0 && p.sign_at(BigInt(1), BigInt(1)) != 0,
                  "unit interval counter needs p(0) != 0 and p(1) != 0");
  if (p.degree() <= 0) return 0;
  if (auto r = float_bisection(p)) {
    ++bisection_stats().float_ok;
    return *r;
  }
  std::vector<BigInt> c = p.coefficients();
  if (auto r = exact_bisection(c)) {
    ++bisection_stats().exact_fallback;
    return *r;
  }
  ++bisection_stats().sturm_fallback;
  return sturm_open_interval_count(p, 0, 1);
}

RealRootSplit split_real_roots(const IntPolynomial& p, RootCounter method) {
  detail::require(!p.is_zero(), "root count of the zero polynomial");
  RealRootSplit s;
  s.mult_zero = root_multiplicity(p, 0);
  s.mult_one = root_multiplicity(p, 1);
  s.mult_minus_one = root_multiplicity(p, -1);
  const IntPolynomial q = deflate_special(p);
  if (q.degree() >= 1) {
    const IntPolynomial rq = reflect(q);
    if (method == RootCounter::sturm) {
      const SturmChain chain(q);
      const BigInt one = 1, zero = 0, minus = -1;
      const std::size_t v_minf = chain.variations_at_infinity(false), v_pinf = chain.variations_at_infinity(true);
      const std::size_t v_m1 = chain.variations_at(minus, one), v_0 = chain.variations_at(zero, one);
      const std::size_t v_1 = chain.variations_at(one, one);
      s.regions = {v_0 - v_1, v_1 - v_pinf, v_m1 - v_0, v_minf - v_m1};
      s.squarefree = chain.squarefree();
    } else {
      s.regions = {count_unit_interval_roots(q), count_unit_interval_roots(reverse(q)),
                   count_unit_interval_roots(rq), count_unit_interval_roots(reverse(rq))};
    }
  }
  if (s.mult_zero > 1 || s.mult_one > 1 || s.mult_minus_one > 1) s.squarefree = false;
  s.nonspecial = s.regions[0] + s.regions[1] + s.regions[2] + s.regions[3];
  s.total = s.nonspecial + (s.mult_zero > 0) + (s.mult_one > 0) + (s.mult_minus_one > 0);
  return s;
}

}  // namespace permlo
