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

#ifndef PERMLO_CORE_MONTE_CARLO_HPP
#define PERMLO_CORE_MONTE_CARLO_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "permlo/core/instance.hpp"
#include "permlo/stats.hpp"

namespace permlo {

/// Trial k always uses the permutation sample_permutation(seed, k), so estimates
/// depend on (seed, trials) only and never on the worker count.
struct McOptions {
  double confidence = 0.99;
  unsigned workers = 0;  // 0 selects default_workers()
};

/// P(|S - center| <= radius) with the comparison done in exact integer arithmetic.
ProbEstimate mc_small_ball(const SquareArray& a, const Rational& center, const Rational& radius,
                           std::uint64_t trials, std::uint64_t seed, const McOptions& opt = {});

struct JointEstimate {
  ProbEstimate joint;
  ProbEstimate first;
  ProbEstimate second;
};

/// Both sums are driven by one permutation per trial.
JointEstimate mc_joint_report(const SquareArray& a1, const SquareArray& a2, const Rational& center1,
                              const Rational& center2, const Rational& radius1, const Rational& radius2,
                              std::uint64_t trials, std::uint64_t seed, const McOptions& opt = {});

ProbEstimate mc_joint_small_ball(const SquareArray& a1, const SquareArray& a2, const Rational& center1,
                                 const Rational& center2, const Rational& radius1, const Rational& radius2,
                                 std::uint64_t trials, std::uint64_t seed, const McOptions& opt = {});

/// Floating weights and values for sweeps whose inputs are irrational (e.g. +-1/sqrt(n)).
/// Each sum is accumulated left to right in double, so results are reproducible.
struct RealPair {
  std::vector<double> w;
  std::vector<double> v;

  std::size_t n() const { return w.size(); }
};

RealPair to_real(const WeightValuePair& p);

/// One estimate per center, all from the same permutation samples.
std::vector<ProbEstimate> mc_small_ball_grid(const RealPair& p, std::span<const double> centers, double radius,
                                             std::uint64_t trials, std::uint64_t seed, const McOptions& opt = {});

/// P(|S - center| >= threshold) per threshold, from shared samples.
std::vector<ProbEstimate> mc_tail_grid(const RealPair& p, double center, std::span<const double> thresholds,
                                       std::uint64_t trials, std::uint64_t seed, const McOptions& opt = {});

/// Sums S1 = sum w_i v1_{pi(i)} and S2 = sum w_i v2_{pi(i)} under one permutation.
struct JointGrid {
  std::vector<ProbEstimate> joint;   // row-major over (centers1, centers2)
  std::vector<ProbEstimate> first;   // per centers1
  std::vector<ProbEstimate> second;  // per centers2
  ProbEstimate comparison;           // P(|S1| <= |S2| / n)
};

JointGrid mc_joint_grid(std::span<const double> w, std::span<const double> v1, std::span<const double> v2,
                        std::span<const double> centers1, std::span<const double> centers2, double radius1,
                        double radius2, std::uint64_t trials, std::uint64_t seed, const McOptions& opt = {});

}  // namespace permlo

#endif  // PERMLO_CORE_MONTE_CARLO_HPP
