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

#include "permlo/lcd.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "permlo/error.hpp"

namespace permlo {

namespace {

std::vector<std::pair<double, std::uint64_t>> differences(const std::vector<Rational>& x) {
  std::map<Rational, std::uint64_t> counts;
  for (const auto& a : x)
    for (const auto& b : x) ++counts[a - b];
  std::vector<std::pair<double, std::uint64_t>> out;
  for (const auto& [d, c] : counts)
    if (d != 0) out.emplace_back(d.get_d(), c);
  return out;
}

Rational pair_square_sum(const std::vector<Rational>& x) {
  Rational s = 0, s2 = 0;
  for (const auto& a : x) {
    s += a;
    s2 += a * a;
  }
  const long n = static_cast<long>(x.size());
  return 2 * n * s2 - 2 * s * s;
}

double circle_norm(double x) { return std::fabs(x - std::nearbyint(x)); }

}  // namespace

QuadVector::QuadVector(const WeightValuePair& pair) : n_(pair.n()) {
  detail::require(n_ >= 1 && pair.v.size() == n_, "malformed weight/value pair");
  norm2_ = std::sqrt(Rational(pair_square_sum(pair.v) * pair_square_sum(pair.w)).get_d());
  dv_ = differences(pair.v);
  dw_ = differences(pair.w);
}

double dist_to_lattice(const QuadVector& u, double D) {
  detail::require(std::isfinite(D) && D > 0, "dist_to_lattice needs D > 0");
  // Zero coordinates contribute nothing and were dropped at construction.
  long double acc = 0;
  for (const auto& [a, ca] : u.v_differences()) {
    const double da = D * a;
    long double row = 0;
    for (const auto& [b, cb] : u.w_differences()) {
      const double r = circle_norm(da * b);
      row += static_cast<long double>(r) * r * static_cast<long double>(cb);
    }
    acc += row * static_cast<long double>(ca);
  }
  return std::sqrt(static_cast<double>(acc));
}

double lcd_slack(const QuadVector& u, double D, double gamma, double kappa) {
  return dist_to_lattice(u, D) - std::fmin(gamma * D * u.norm2(), kappa);
}

double default_kappa(std::size_t n) {
  const double nn = static_cast<double>(n);
  const double base = std::pow(nn, 1.5);
  return n >= 2 ? std::fmax(base, std::sqrt(2.0 * std::log(nn)) * base) : base;
}

LcdResult lcd_estimate(const WeightValuePair& pair, double gamma, double kappa, const LcdGrid& grid) {
  detail::require(gamma > 0 && gamma < 1, "gamma must lie in (0, 1)");
  const double floor_kappa = std::pow(static_cast<double>(pair.n()), 1.5);
  detail::require(kappa >= floor_kappa, "kappa must be at least n^{3/2}");
  detail::require(grid.step > 0 && grid.d_max > grid.step, "LCD grid needs 0 < step < d_max");
  detail::require(grid.passes >= 0 && grid.factor > 1, "LCD refinement needs passes >= 0 and factor > 1");
  const QuadVector u(pair);
  LcdResult res;
  res.gamma = gamma;
  res.kappa = kappa;
  res.grid = grid;

  auto in_set = [&](double D) { return lcd_slack(u, D, gamma, kappa) < 0; };
  // Scan (lo, hi] at this step; returns the first member, or hi + 1 when none.
  double lo = 0.0, step = grid.step;
  double hit = -1.0;
  const auto coarse = static_cast<std::uint64_t>(std::floor(grid.d_max / step + 1e-9));
  for (std::uint64_t k = 1; k <= coarse; ++k) {
    const double D = static_cast<double>(k) * step;
    if (in_set(D)) {
      hit = D;
      break;
    }
    lo = D;
  }
  if (hit < 0) {
    res.found = false;
    res.d_star = grid.d_max;
    res.d_below = lo;
    res.final_step = step;
    res.achieved_dist = dist_to_lattice(u, grid.d_max);
    res.threshold = std::fmin(gamma * grid.d_max * u.norm2(), kappa);
    return res;
  }
  for (int pass = 0; pass < grid.passes; ++pass) {
    const double fine = step / grid.factor;
    const auto count = static_cast<std::uint64_t>(std::llround(grid.factor));
    for (std::uint64_t k = 1; k < count; ++k) {
      const double D = lo + static_cast<double>(k) * fine;
      if (in_set(D)) {
        hit = D;
        break;
      }
      lo = D;
    }
    step = fine;
  }
  res.found = true;
  res.d_star = hit;
  res.d_below = lo;
  res.final_step = step;
  res.achieved_dist = dist_to_lattice(u, hit);
  res.threshold = std::fmin(gamma * hit * u.norm2(), kappa);
  return res;
}

double lcd_small_ball_bound(const WeightValuePair& pair, double gamma, double kappa, double delta, double c_lcd,
                            const LcdGrid& grid) {
  detail::require(delta > 0 && c_lcd > 0, "delta and C_lcd must be positive");
  const double n = static_cast<double>(pair.n());
  const QuadVector u(pair);
  if (u.norm2() < std::pow(n, 1.5)) {
    std::ostringstream msg;
    msg << "hypothesis ||u||_2 >= n^{3/2} fails: ||u||_2 = " << u.norm2() << " < " << std::pow(n, 1.5);
    throw PreconditionError(msg.str());
  }
  const LcdResult lcd = lcd_estimate(pair, gamma, kappa, grid);
  if (delta * lcd.d_star < 1.0) {
    std::ostringstream msg;
    msg << "hypothesis delta >= 1/LCD fails: delta = " << delta << ", LCD " << (lcd.found ? "~ " : ">= ")
        << lcd.d_star;
    throw PreconditionError(msg.str());
  }
  return c_lcd * (delta / gamma + std::exp(-kappa * kappa / (2.0 * n * n * n)));
}

}  // namespace permlo
