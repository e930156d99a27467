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

#include "permlo/polyroots/descartes.hpp"

#include <algorithm>

#include "permlo/error.hpp"

namespace permlo {

namespace {

// t-fold prefix sums of a (padded to m_max): level t of the binomial-weighted sums.
// C(m - i + t - 1, t - 1) = sum_{j=i}^m C(j - i + t - 2, t - 2) gives the recursion.
std::vector<BigInt> prefix_sums(std::span<const BigInt> a, unsigned t, std::size_t m_max) {
  std::vector<BigInt> c(m_max);
  for (std::size_t m = 0; m < m_max && m < a.size(); ++m) c[m] = a[m];
  for (unsigned level = 0; level < t; ++level)
    for (std::size_t m = 1; m < m_max; ++m) c[m] += c[m - 1];
  return c;
}

}  // namespace

std::vector<BigInt> descartes_c_sequence(std::span<const BigInt> a, unsigned t, std::size_t m_max) {
  detail::require(t >= 2, "descartes_c_sequence needs t >= 2");
  return prefix_sums(a, t, m_max);
}

std::size_t sign_changes(std::span<const BigInt> c) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& x : c) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::array<std::vector<BigInt>, 4> four_vectors(std::span<const BigInt> a) {
  std::array<std::vector<BigInt>, 4> out;
  out[0].assign(a.begin(), a.end());
  out[1] = out[0];
  for (std::size_t i = 1; i < out[1].size(); i += 2) out[1][i] = -out[1][i];
  out[2].assign(a.rbegin(), a.rend());
  out[3].assign(out[1].rbegin(), out[1].rend());
  return out;
}

DescartesBound descartes_bound(std::span<const BigInt> a, unsigned t, std::size_t m_max) {
  detail::require(t >= 2, "descartes_bound needs t >= 2");
  if (m_max == 0) m_max = a.size();
  detail::require(m_max >= a.size(), "descartes_bound needs m_max >= vector length");
  DescartesBound out;
  const auto vectors = four_vectors(a);
  for (int k = 0; k < 4; ++k) {
    const auto lower = prefix_sums(vectors[k], t - 1, m_max);
    std::vector<BigInt> c = lower;
    for (std::size_t m = 1; m < m_max; ++m) c[m] += c[m - 1];
    DescartesReport& r = out.vectors[k];
    r.vector_id = k + 1;
    r.t_param = t;
    r.sign_changes = sign_changes(c);
    for (std::size_t m = 0; m < m_max; ++m)
      if (abs(c[m]) < abs(lower[m])) ++r.events;
    r.bound = r.sign_changes + t - 1;
    out.bound_total += r.bound;
  }
  return out;
}

DescartesBound descartes_bound(const IntPolynomial& p, std::size_t n, unsigned d, unsigned t) {
  detail::require(p.degree() <= static_cast<long>(n), "polynomial degree exceeds n");
  detail::require(d <= n, "derivative order exceeds n");
  const IntPolynomial q = derivative(p, d);
  std::vector<BigInt> a(n - d + 1);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = q.coeff(k);
  return descartes_bound(a, t == 0 ? d + 2 : t);
}

BigInt alternating_sum_S(unsigned t, unsigned d, unsigned m) {
  BigInt s = 0;
  for (unsigned i = 0; i <= m; ++i) {
    BigInt term = binomial(static_cast<long>(m - i + t), t) * falling_factorial(static_cast<long>(i + d), d);
    if (i % 2 == 0)
      s += term;
    else
      s -= term;
  }
  return s;
}

}  // namespace permlo
