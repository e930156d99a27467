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

#include "permlo/charfn.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "permlo/error.hpp"
#include "permlo/parallel.hpp"

namespace permlo {

namespace {

using cld = std::complex<long double>;

void require_pairing(std::span<const std::size_t> pairing, std::size_t n) {
  check_permutation(pairing, n);
}

// Distance to the nearest integer, ties to even.
double circle_norm(double x) { return std::fabs(x - std::nearbyint(x)); }

long double factorial_ld(std::size_t n) {
  long double f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<long double>(k);
  return f;
}

}  // namespace

std::complex<double> permanent(std::span<const std::complex<double>> m, std::size_t n) {
  detail::require(n >= 1 && m.size() == n * n, "permanent: matrix is not n x n");
  if (n == 1) return m[0];
  detail::require(n <= 62, "permanent: n too large for a subset walk");
  std::vector<cld> rows(n, cld(0, 0));
  cld total(0, 0);
  std::vector<char> in(n, 0);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  int size = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const auto col = static_cast<std::size_t>(__builtin_ctzll(k));
    const long double sign = in[col] ? -1.0L : 1.0L;
    in[col] ^= 1;
    size += in[col] ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) rows[i] += sign * cld(m[i * n + col].real(), m[i * n + col].imag());
    cld prod = rows[0];
    for (std::size_t i = 1; i < n; ++i) prod *= rows[i];
    if (size % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  if (n % 2 == 1) total = -total;
  return {static_cast<double>(total.real()), static_cast<double>(total.imag())};
}

CfSample exact_cf(const SquareArray& a, double t, const CfOptions& opt) {
  const std::size_t n = a.n();
  if (n > opt.cap)
    throw CapacityError("n = " + std::to_string(n) + " exceeds the permanent cap " + std::to_string(opt.cap));
  std::vector<double> ad = a.to_double();
  std::vector<std::complex<double>> m(n * n);
  for (std::size_t k = 0; k < n * n; ++k) m[k] = std::polar(1.0, t * ad[k]);
  std::complex<double> p = permanent(m, n);
  const long double f = factorial_ld(n);
  CfSample s;
  s.t = t;
  s.value = {static_cast<double>(p.real() / f), static_cast<double>(p.imag() / f)};
  s.modulus = std::abs(s.value);
  return s;
}

std::vector<CfSample> exact_cf_grid(const SquareArray& a, std::span<const double> ts, const CfOptions& opt) {
  if (a.n() > opt.cap)
    throw CapacityError("n = " + std::to_string(a.n()) + " exceeds the permanent cap " + std::to_string(opt.cap));
  std::vector<CfSample> out(ts.size());
  parallel_blocks(ts.size(), opt.workers, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t k = begin; k < end; ++k) out[k] = exact_cf(a, ts[k], opt);
  });
  return out;
}

QuadrupleDifference quadruple_difference(const SquareArray& a, std::size_t i, std::size_t j, std::size_t k,
                                         std::size_t l) {
  const std::size_t n = a.n();
  detail::require(i < n && j < n && k < n && l < n, "quadruple index out of range");
  return QuadrupleDifference{i, j, k, l, a(i, k) - a(j, k) - a(i, l) + a(j, l)};
}

QuadrupleTable::QuadrupleTable(const SquareArray& a) : n_(a.n()), y_(n_ * n_ * n_ * n_, 0.0) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t l = 0; l < n_; ++l) {
          Rational y = a(i, k) - a(j, k) - a(i, l) + a(j, l);
          y_[((i * n_ + j) * n_ + k) * n_ + l] = y.get_d();
        }
}

double roos_bound_power(const QuadrupleTable& q, double t) {
  const std::size_t n = q.n();
  detail::require(n >= 2, "Roos bound needs n >= 2");
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (k == l) continue;
          const double c = std::cos(t * q.y(i, j, k, l) / 2.0);
          acc += c * c;
        }
    }
  const double nn = static_cast<double>(n);
  const double mean = std::fmin(1.0, acc / (nn * nn * (nn - 1) * (nn - 1)));
  return std::pow(mean, static_cast<double>(n / 2) / 2.0);
}

double roos_bound_power(const SquareArray& a, double t) {
  detail::require(a.n() >= 2, "Roos bound needs n >= 2");
  return roos_bound_power(QuadrupleTable(a), t);
}

double roos_bound_product(const QuadrupleTable& q, double t, std::span<const std::size_t> pairing) {
  const std::size_t n = q.n();
  detail::require(n >= 2, "Roos bound needs n >= 2");
  require_pairing(pairing, n);
  const double nn = static_cast<double>(n);
  double prod = 1.0;
  for (std::size_t k = 0; k < n / 2; ++k) {
    const std::size_t c1 = pairing[2 * k], c2 = pairing[2 * k + 1];
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        const double c = std::cos(t * q.y(i, j, c1, c2) / 2.0);
        acc += c * c;
      }
    prod *= std::sqrt(std::fmin(1.0, acc / (nn * (nn - 1))));
  }
  return prod;
}

double roos_bound_product(const SquareArray& a, double t, std::span<const std::size_t> pairing) {
  detail::require(a.n() >= 2, "Roos bound needs n >= 2");
  return roos_bound_product(QuadrupleTable(a), t, pairing);
}

double roos_exp_bound(const QuadrupleTable& q, double t) {
  const std::size_t n = q.n();
  detail::require(n >= 2, "Roos bound needs n >= 2");
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const double r = circle_norm(t * q.y(i, j, k, l));
          acc += r * r;
        }
  const double nn = static_cast<double>(n);
  return std::exp(-acc / (2.0 * nn * nn * nn));
}

double roos_exp_bound(const SquareArray& a, double t) {
  detail::require(a.n() >= 2, "Roos bound needs n >= 2");
  return roos_exp_bound(QuadrupleTable(a), t);
}

double esseen_small_ball_bound(const SquareArray& a, double delta, CfSurrogate kind, const EsseenOptions& opt) {
  detail::require(std::isfinite(delta) && delta > 0, "Esseen bound needs delta > 0");
  detail::require(opt.grid_points >= 64, "Esseen bound needs at least 64 grid points");
  detail::require(opt.c_e > 0, "Esseen constant must be positive");
  const std::size_t m = opt.grid_points;
  const double h = 2.0 / static_cast<double>(m - 1);
  std::vector<double> f(m);
  if (kind == CfSurrogate::exact_cf) {
    if (a.n() > opt.cap)
      throw CapacityError("n = " + std::to_string(a.n()) + " exceeds the permanent cap " + std::to_string(opt.cap));
    CfOptions cf{opt.cap, 1};
    parallel_blocks(m, opt.workers, [&](std::size_t begin, std::size_t end, unsigned) {
      for (std::size_t k = begin; k < end; ++k) f[k] = exact_cf(a, (-1.0 + h * static_cast<double>(k)) / delta, cf).modulus;
    });
  } else {
    detail::require(a.n() >= 2, "Roos bound needs n >= 2");
    const QuadrupleTable q(a);
    const double scale = 1.0 / (2.0 * std::numbers::pi * delta);
    parallel_blocks(m, opt.workers, [&](std::size_t begin, std::size_t end, unsigned) {
      for (std::size_t k = begin; k < end; ++k) f[k] = roos_exp_bound(q, (-1.0 + h * static_cast<double>(k)) * scale);
    });
  }
  double integral = 0.5 * (f.front() + f.back());
  for (std::size_t k = 1; k + 1 < m; ++k) integral += f[k];
  return opt.c_e * integral * h;
}

}  // namespace permlo
