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

#ifndef PERMLO_CHARFN_HPP
#define PERMLO_CHARFN_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "permlo/core/instance.hpp"

namespace permlo {

/// phi(t) = E exp(i t S).
struct CfSample {
  double t = 0.0;
  std::complex<double> value;
  double modulus = 0.0;  // |value|
};

/// Permanent of a row-major n x n complex matrix by Ryser's formula over a Gray-code
/// walk of column subsets: O(2^n n). Row sums and the signed sum are carried in
/// long double, and the absolute error is at most about 2^n n^n eps_ld max|m|^n.
std::complex<double> permanent(std::span<const std::complex<double>> m, std::size_t n);

struct CfOptions {
  std::size_t cap = 16;  // largest n accepted by the permanent
  unsigned workers = 0;
};

/// phi(t) = perm(exp(i t a_kl)) / n!.
CfSample exact_cf(const SquareArray& a, double t, const CfOptions& opt = {});
std::vector<CfSample> exact_cf_grid(const SquareArray& a, std::span<const double> ts, const CfOptions& opt = {});

/// y = a_ik - a_jk - a_il + a_jl, with 0-based indices.
struct QuadrupleDifference {
  std::size_t i = 0, j = 0, k = 0, l = 0;
  Rational y;
};

QuadrupleDifference quadruple_difference(const SquareArray& a, std::size_t i, std::size_t j, std::size_t k,
                                         std::size_t l);

/// Quadruple differences of an array as doubles, each rounded once from its exact value.
class QuadrupleTable {
 public:
  explicit QuadrupleTable(const SquareArray& a);

  std::size_t n() const { return n_; }
  double y(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return y_[((i * n_ + j) * n_ + k) * n_ + l];
  }

 private:
  std::size_t n_;
  std::vector<double> y_;
};

/// ( sum_{i != j, k != l} cos^2(t y / 2) / (n^2 (n-1)^2) )^{floor(n/2) / 2}.
double roos_bound_power(const QuadrupleTable& q, double t);
double roos_bound_power(const SquareArray& a, double t);

/// prod_{k=1}^{floor(n/2)} ( sum_{i != j} cos^2(t y_{i,j,l(2k-1),l(2k)} / 2) / (n (n-1)) )^{1/2}
/// for a pairing l given as a 0-based permutation.
double roos_bound_product(const QuadrupleTable& q, double t, std::span<const std::size_t> pairing);
double roos_bound_product(const SquareArray& a, double t, std::span<const std::size_t> pairing);

/// exp( -(1 / 2n^3) sum_{i,j,k,l} ||t y||^2 ), an upper bound for |phi(2 pi t)|.
double roos_exp_bound(const QuadrupleTable& q, double t);
double roos_exp_bound(const SquareArray& a, double t);

enum class CfSurrogate { exact_cf, roos_exp };

struct EsseenOptions {
  /// Multiplier of the integral. Any value >= 1.0877 is valid: the triangle kernel's
  /// transform (sin(x/2)/(x/2))^2 stays above 0.9194 on the unit ball.
  double c_e = 2.0;
  std::size_t grid_points = 2048;
  std::size_t cap = 16;
  unsigned workers = 0;
};

/// c_e * integral_{-1}^{1} |phi(t / delta)| dt by the trapezoid rule, an upper bound for
/// sup_L P(|S - L| <= delta). With roos_exp the integrand is roos_exp_bound(t / (2 pi delta)).
double esseen_small_ball_bound(const SquareArray& a, double delta, CfSurrogate kind,
                               const EsseenOptions& opt = {});

}  // namespace permlo

#endif  // PERMLO_CHARFN_HPP
