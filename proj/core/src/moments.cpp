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

#include "permlo/core/moments.hpp"

#include <cmath>

#include "permlo/error.hpp"

namespace permlo {

namespace {

BigInt from_int128(__int128 x) {
  const bool neg = x < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

}  // namespace

Rational variance_formula(const SquareArray& a) {
  const std::size_t n = a.n();
  detail::require(n >= 2, "variance formula needs n >= 2");
  ScaledArray s = scale_array(a);
  BigInt sum = 0;
  auto small = narrow_to_int64(s.numerators, BigInt(1) << 29);
  if (small && n < (1u << 12)) {
    const auto& x = *small;
    __int128 acc = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            if (k == l) continue;
            const std::int64_t y = x[i * n + k] - x[j * n + k] - x[i * n + l] + x[j * n + l];
            acc += static_cast<__int128>(y * y);
          }
      }
    sum = from_int128(acc);
  } else {
    const auto& x = s.numerators;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            if (k == l) continue;
            BigInt y = x[i * n + k] - x[j * n + k] - x[i * n + l] + x[j * n + l];
            sum += y * y;
          }
      }
  }
  const auto ln = static_cast<unsigned long>(n);
  BigInt denom = BigInt(4) * ln * ln * (ln - 1) * s.denominator * s.denominator;
  Rational r(sum, denom);
  r.canonicalize();
  return r;
}

StatSummary stat_summary(std::span<const Rational> w) {
  detail::require(!w.empty(), "stat_summary: empty input");
  StatSummary st;
  const auto ln = static_cast<long>(w.size());
  Rational total = 0;
  for (const auto& x : w) total += x;
  st.mean = total / ln;
  Rational s2 = 0, s3 = 0, s4 = 0;
  for (const auto& x : w) {
    Rational d = x - st.mean;
    Rational d2 = d * d;
    s2 += d2;
    s3 += d2 * d;
    s4 += d2 * d2;
  }
  st.sigma_squared = s2;
  st.m2 = s2 / ln;
  st.m3 = s3 / ln;
  st.m4 = s4 / ln;
  st.variance = st.m2;
  st.sigma = std::sqrt(s2.get_d());
  return st;
}

}  // namespace permlo
