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

#ifndef PERMLO_CORE_MOMENTS_HPP
#define PERMLO_CORE_MOMENTS_HPP

#include <span>

#include "permlo/core/instance.hpp"
#include "permlo/rational.hpp"

namespace permlo {

/// Var S over a uniform permutation from the quadruple differences
/// y = a_ik - a_jk - a_il + a_jl:  sum_{i != j, k != l} y^2 / (4 n^2 (n-1)).
/// Requires n >= 2.
Rational variance_formula(const SquareArray& a);

/// Exact location and spread of a weight vector.
struct StatSummary {
  Rational mean;
  Rational sigma_squared;  // sum_i (w_i - mean)^2
  Rational variance;       // M2
  Rational m2, m3, m4;     // M_k = (1/n) sum_i (w_i - mean)^k
  double sigma = 0.0;      // sqrt(sigma_squared)
};

StatSummary stat_summary(std::span<const Rational> w);

}  // namespace permlo

#endif  // PERMLO_CORE_MOMENTS_HPP
