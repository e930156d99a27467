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

#include "permlo/core/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "permlo/error.hpp"
#include "permlo/parallel.hpp"

namespace permlo {

namespace {

constexpr std::size_t kFlushSize = std::size_t{1} << 22;

template <class T>
void flush_sorted(std::vector<T>& buf, std::map<T, std::uint64_t>& into) {
  std::sort(buf.begin(), buf.end());
  for (std::size_t i = 0; i < buf.size();) {
    std::size_t j = i + 1;
    while (j < buf.size() && buf[j] == buf[i]) ++j;
    into[buf[i]] += j - i;
    i = j;
  }
  buf.clear();
}

// All permutations with pi(0) = first, by Heap's algorithm on positions 1..n-1.
// The running sum is updated by the two-entry delta of each transposition.
template <class T>
void enumerate_unit(std::size_t n, const std::vector<T>& a, std::size_t first, std::map<T, std::uint64_t>& out) {
  std::vector<std::size_t> r;
  r.reserve(n - 1);
  for (std::size_t j = 0; j < n; ++j)
    if (j != first) r.push_back(j);
  const std::size_t m = r.size();
  auto at = [&](std::size_t row, std::size_t col) -> const T& { return a[row * n + col]; };
  T sum = at(0, first);
  for (std::size_t k = 0; k < m; ++k) sum += at(k + 1, r[k]);

  std::vector<T> buf;
  buf.reserve(std::min<std::size_t>(kFlushSize, 1 << 16));
  buf.push_back(sum);
  auto swap_positions = [&](std::size_t x, std::size_t y) {
    sum += at(x + 1, r[y]) + at(y + 1, r[x]) - at(x + 1, r[x]) - at(y + 1, r[y]);
    std::swap(r[x], r[y]);
  };
  std::vector<std::size_t> c(m, 0);
  std::size_t i = 0;
  while (i < m) {
    if (c[i] < i) {
      if (i % 2 == 0)
        swap_positions(0, i);
      else
        swap_positions(c[i], i);
      buf.push_back(sum);
      if (buf.size() >= kFlushSize) flush_sorted(buf, out);
      ++c[i];
      i = 0;
    } else {
      c[i] = 0;
      ++i;
    }
  }
  flush_sorted(buf, out);
}

template <class T>
std::map<T, std::uint64_t> enumerate_all(std::size_t n, const std::vector<T>& a, unsigned workers) {
  std::vector<std::map<T, std::uint64_t>> units(n);
  parallel_blocks(n, workers, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t u = begin; u < end; ++u) enumerate_unit(n, a, u, units[u]);
  });
  std::map<T, std::uint64_t> merged;
  for (auto& unit : units)
    for (auto& [value, count] : unit) merged[value] += count;
  return merged;
}

void check_cap(std::size_t n, const EnumerationOptions& opt) {
  if (opt.cap > kMaxEnumerationCap)
    throw ArgumentError("enumeration cap " + std::to_string(opt.cap) + " exceeds the hard limit " +
                        std::to_string(kMaxEnumerationCap));
  if (n > opt.cap)
    throw CapacityError("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(opt.cap));
}

}  // namespace

const BigInt& AtomDistribution::max_count() const {
  detail::require(!atoms.empty(), "empty distribution");
  auto it = std::max_element(atoms.begin(), atoms.end(),
                             [](const auto& x, const auto& y) { return x.second < y.second; });
  return it->second;
}

Rational AtomDistribution::probability_at(const Rational& x) const {
  auto it = atoms.find(x);
  if (it == atoms.end()) return 0;
  Rational p(it->second, total);
  p.canonicalize();
  return p;
}

AtomDistribution exact_atom_distribution(const SquareArray& a, const EnumerationOptions& opt) {
  check_cap(a.n(), opt);
  const std::size_t n = a.n();
  ScaledArray s = scale_array(a);
  AtomDistribution dist;
  dist.total = factorial(static_cast<unsigned>(n));
  auto emit = [&](const BigInt& num, std::uint64_t count) {
    Rational x(num, s.denominator);
    x.canonicalize();
    BigInt c;
    mpz_import(c.get_mpz_t(), 1, 1, sizeof(count), 0, 0, &count);
    dist.atoms.emplace(std::move(x), std::move(c));
  };
  if (s.small) {
    for (auto& [value, count] : enumerate_all<std::int64_t>(n, *s.small, opt.workers))
      emit(BigInt(static_cast<long>(value)), count);
  } else {
    for (auto& [value, count] : enumerate_all<BigInt>(n, s.numerators, opt.workers)) emit(value, count);
  }
  return dist;
}

Rational exact_rho(const AtomDistribution& dist) {
  Rational r(dist.max_count(), dist.total);
  r.canonicalize();
  return r;
}

Rational exact_rho(const SquareArray& a, const EnumerationOptions& opt) {
  return exact_rho(exact_atom_distribution(a, opt));
}

Rational exact_small_ball(const AtomDistribution& dist, const Rational& center, const Rational& radius) {
  detail::require(radius >= 0, "radius must be nonnegative");
  BigInt hits = 0;
  for (auto it = dist.atoms.lower_bound(center - radius); it != dist.atoms.end() && it->first <= center + radius; ++it)
    hits += it->second;
  Rational p(hits, dist.total);
  p.canonicalize();
  return p;
}

Rational exact_small_ball(const SquareArray& a, const Rational& center, const Rational& radius,
                          const EnumerationOptions& opt) {
  detail::require(radius >= 0, "radius must be nonnegative");
  return exact_small_ball(exact_atom_distribution(a, opt), center, radius);
}

SupSmallBall sup_small_ball(const AtomDistribution& dist, const Rational& radius) {
  detail::require(radius >= 0, "radius must be nonnegative");
  detail::require(!dist.atoms.empty(), "empty distribution");
  // Some optimal window [L - r, L + r] starts at an atom, so slide over atoms.
  std::vector<std::pair<const Rational*, const BigInt*>> xs;
  xs.reserve(dist.atoms.size());
  for (const auto& [x, c] : dist.atoms) xs.emplace_back(&x, &c);
  const Rational width = 2 * radius;
  BigInt window = 0, best = -1;
  std::size_t hi = 0, best_lo = 0;
  for (std::size_t lo = 0; lo < xs.size(); ++lo) {
    while (hi < xs.size() && *xs[hi].first - *xs[lo].first <= width) window += *xs[hi++].second;
    if (window > best) {
      best = window;
      best_lo = lo;
    }
    window -= *xs[lo].second;
  }
  SupSmallBall out;
  out.probability = Rational(best, dist.total);
  out.probability.canonicalize();
  out.center = *xs[best_lo].first + radius;
  return out;
}

Rational distribution_mean(const AtomDistribution& dist) {
  Rational acc = 0;
  for (const auto& [x, c] : dist.atoms) acc += x * c;
  return acc / dist.total;
}

Rational distribution_variance(const AtomDistribution& dist) {
  const Rational mu = distribution_mean(dist);
  Rational acc = 0;
  for (const auto& [x, c] : dist.atoms) {
    Rational d = x - mu;
    acc += d * d * c;
  }
  return acc / dist.total;
}

void for_each_permutation(std::size_t n, const std::function<void(std::span<const std::size_t>)>& visit) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    visit(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace permlo
