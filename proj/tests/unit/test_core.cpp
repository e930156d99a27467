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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "permlo/core/enumeration.hpp"
#include "permlo/core/instance.hpp"
#include "permlo/core/moments.hpp"
#include "permlo/core/monte_carlo.hpp"
#include "permlo/error.hpp"

namespace permlo {
namespace {

std::vector<Rational> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

SquareArray product_array(std::size_t n) {
  std::vector<Rational> e;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) e.emplace_back(static_cast<long>(i * j));
  return SquareArray(n, e);
}

SquareArray pair_array(std::initializer_list<long> w, std::initializer_list<long> v) {
  return SquareArray::from_pair(make_pair(ints(w), ints(v)));
}

TEST(Instance, SumForPermutation) {
  std::vector<Rational> id;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) id.emplace_back(i == j ? 1 : 0);
  const std::vector<std::size_t> identity{0, 1, 2}, cycle{1, 2, 0};
  EXPECT_EQ(sum_for_perm(SquareArray(3, id), identity), 3);
  EXPECT_EQ(sum_for_perm(product_array(3), cycle), 11);
  const std::vector<std::size_t> id4{0, 1, 2, 3};
  EXPECT_EQ(sum_for_perm(pair_array({-5, -5, 5, 5}, {1, 2, 3, 4}), id4), 20);
}

TEST(Instance, RejectsMalformedInput) {
  EXPECT_THROW(make_pair(ints({1, 2}), ints({1})), ArgumentError);
  EXPECT_THROW(make_pair({}, {}), ArgumentError);
  const std::vector<std::size_t> short_perm{0, 1};
  EXPECT_THROW(sum_for_perm(product_array(3), short_perm), ArgumentError);
  const std::vector<std::size_t> repeated{0, 0, 1};
  EXPECT_THROW(sum_for_perm(product_array(3), repeated), ArgumentError);
  EXPECT_THROW(SquareArray(std::vector<std::vector<Rational>>{{1, 2}, {3}}), ArgumentError);
}

TEST(Instance, Generators) {
  EXPECT_EQ(linear_values(4), (std::vector<Rational>{Rational(1, 4), Rational(1, 2), Rational(3, 4), 1}));
  const std::vector<long> square{0, 0, 1};
  EXPECT_EQ(polynomial_values(2, square), (std::vector<Rational>{Rational(1, 4), 1}));
  const auto r = conditioned_rademacher(10, 4, 3);
  long s = 0;
  for (long x : r) {
    EXPECT_TRUE(x == 1 || x == -1);
    s += x;
  }
  EXPECT_EQ(s, 4);
  EXPECT_EQ(conditioned_rademacher(10, 4, 3), r);
  EXPECT_THROW(conditioned_rademacher(10, 3, 1), ArgumentError);
  EXPECT_THROW(conditioned_rademacher(4, 6, 1), ArgumentError);
  const WeightValuePair ex = extremal_pair(4);
  EXPECT_EQ(ex.w, ints({-5, -5, 5, 5}));
  EXPECT_EQ(ex.v, ints({1, 2, 3, 4}));
  EXPECT_EQ(sharp_atom_bound(4), Rational(1, 3));
  EXPECT_EQ(sharp_atom_bound(5), Rational(1, 5));
}

TEST(Enumeration, SingletonAndCapacity) {
  const AtomDistribution d = exact_atom_distribution(SquareArray(1, ints({7})));
  ASSERT_EQ(d.atoms.size(), 1u);
  EXPECT_EQ(d.atoms.begin()->first, 7);
  EXPECT_EQ(d.total, 1);
  std::mt19937_64 g(1);
  const SquareArray big = oracle::random_array(g, 11, 5, 1);
  EXPECT_THROW(exact_atom_distribution(big), CapacityError);
  EnumerationOptions opt;
  opt.cap = 30;
  EXPECT_THROW(exact_atom_distribution(oracle::random_array(g, 21, 5, 1), opt), ArgumentError);
}

TEST(Enumeration, RhoExamples) {
  EXPECT_EQ(exact_rho(pair_array({-5, -5, 5, 5}, {1, 2, 3, 4})), Rational(1, 3));
  EXPECT_EQ(exact_rho(pair_array({2, 2, 2, 2}, {1, 2, 3, 4})), 1);
  EXPECT_EQ(exact_rho(pair_array({1, -1, 0, 0}, {1, 2, 3, 4})), Rational(1, 4));
  const AtomDistribution d = exact_atom_distribution(pair_array({1, -1, 0, 0}, {1, 2, 3, 4}));
  EXPECT_EQ(d.total, 24);
  EXPECT_EQ(d.max_count(), 6);
  EXPECT_EQ(d.probability_at(Rational(1)), Rational(1, 4));
  EXPECT_EQ(d.probability_at(Rational(1, 2)), 0);
}

TEST(Enumeration, SmallBallExamples) {
  const SquareArray a = pair_array({1, -1, 0, 0}, {1, 2, 3, 4});
  EXPECT_EQ(exact_small_ball(a, 0, 1), Rational(1, 2));
  EXPECT_EQ(exact_small_ball(a, 0, 100), 1);
  EXPECT_THROW(exact_small_ball(a, 0, -1), ArgumentError);
  const AtomDistribution d = exact_atom_distribution(a);
  const SupSmallBall s = sup_small_ball(d, 0);
  EXPECT_EQ(s.probability, Rational(1, 4));
  EXPECT_EQ(exact_small_ball(d, s.center, 0), Rational(1, 4));
}

TEST(Enumeration, MatchesBruteForceOnRandomInstances) {
  std::mt19937_64 g(20261014);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 1 + rep % 7;
    const SquareArray a = oracle::random_array(g, n, 4, 3);
    const AtomDistribution d = exact_atom_distribution(a);
    const auto brute = oracle::brute_distribution(a);
    ASSERT_EQ(d.atoms.size(), brute.size());
    for (const auto& [x, c] : brute) EXPECT_EQ(d.atoms.at(x), c);
    EXPECT_EQ(exact_rho(d), oracle::brute_rho(a));
    const Rational center = oracle::random_rational(g, 6, 2), radius = abs(oracle::random_rational(g, 3, 2));
    EXPECT_EQ(exact_small_ball(d, center, radius), oracle::brute_small_ball(a, center, radius));
    // sup over centers dominates every fixed center.
    EXPECT_GE(sup_small_ball(d, radius).probability, exact_small_ball(d, center, radius));
  }
}

TEST(Enumeration, ResultIsIndependentOfWorkers) {
  std::mt19937_64 g(7);
  const SquareArray a = oracle::random_array(g, 8, 6, 2);
  EnumerationOptions one, many;
  one.workers = 1;
  many.workers = 5;
  EXPECT_EQ(exact_atom_distribution(a, one).atoms, exact_atom_distribution(a, many).atoms);
}

TEST(Enumeration, SharpAtomBoundHoldsAndIsAttained) {
  for (std::size_t n = 4; n <= 8; ++n) {
    const WeightValuePair ex = extremal_pair(n);
    EXPECT_EQ(exact_rho(SquareArray::from_pair(ex)), sharp_atom_bound(n)) << n;
  }
  std::mt19937_64 g(11);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 4 + rep % 4;
    const auto w = oracle::zero_sum_weights(g, n, 6);
    const auto v = oracle::distinct_values(g, n, 10);
    EXPECT_LE(exact_rho(SquareArray::from_pair(make_pair(w, v))), sharp_atom_bound(n));
  }
}

TEST(Moments, VarianceFormulaExamples) {
  EXPECT_EQ(variance_formula(product_array(3)), 2);
  EXPECT_EQ(variance_formula(SquareArray(3, std::vector<Rational>(9, Rational(5)))), 0);
  EXPECT_THROW(variance_formula(SquareArray(1, ints({1}))), ArgumentError);
  EXPECT_EQ(oracle::brute_variance(product_array(3)), 2);
}

TEST(Moments, VarianceFormulaMatchesEnumeration) {
  std::mt19937_64 g(3);
  for (int rep = 0; rep < 30; ++rep) {
    const SquareArray a = oracle::random_array(g, 2 + rep % 6, 5, 4);
    const AtomDistribution d = exact_atom_distribution(a);
    EXPECT_EQ(variance_formula(a), distribution_variance(d));
    EXPECT_EQ(distribution_variance(d), oracle::brute_variance(a));
  }
}

TEST(Moments, StatSummaryExamples) {
  const std::vector<Rational> alt = ints({1, -1, 1, -1});
  StatSummary s = stat_summary(alt);
  EXPECT_EQ(s.mean, 0);
  EXPECT_EQ(s.sigma_squared, 4);
  EXPECT_EQ(s.m2, 1);
  EXPECT_EQ(s.m4, 1);
  EXPECT_DOUBLE_EQ(s.sigma, 2.0);
  const std::vector<Rational> c = ints({3, 3, 3});
  s = stat_summary(c);
  EXPECT_EQ(s.sigma_squared, 0);
  EXPECT_EQ(s.m2, 0);
  EXPECT_EQ(s.m3, 0);
  EXPECT_EQ(s.m4, 0);
  const std::vector<Rational> w = ints({1, 2, 3});
  s = stat_summary(w);
  EXPECT_EQ(s.mean, 2);
  EXPECT_EQ(s.sigma_squared, 2);
  EXPECT_THROW(stat_summary(std::vector<Rational>{}), ArgumentError);
}

TEST(MonteCarlo, DegenerateInstanceIsCertain) {
  const SquareArray a = pair_array({2, 2, 2}, {1, 2, 3});
  const ProbEstimate e = mc_small_ball(a, 12, 0, 1000, 5);
  EXPECT_EQ(e.hits, 1000u);
  EXPECT_EQ(e.point, 1.0);
  EXPECT_THROW(mc_small_ball(a, 12, 0, 0, 5), ArgumentError);
}

TEST(MonteCarlo, MatchesExactSmallBallAndIsDeterministic) {
  const SquareArray a = pair_array({1, -1, 0, 0}, {1, 2, 3, 4});
  McOptions one, many;
  one.workers = 1;
  many.workers = 4;
  const ProbEstimate e1 = mc_small_ball(a, 0, 1, 1'000'000, 99, one);
  const ProbEstimate e2 = mc_small_ball(a, 0, 1, 1'000'000, 99, many);
  EXPECT_EQ(e1.hits, e2.hits);
  EXPECT_LE(e1.ci_low, 0.5);
  EXPECT_GE(e1.ci_high, 0.5);
  EXPECT_NE(mc_small_ball(a, 0, 1, 1000, 100).hits, 0u);
}

TEST(MonteCarlo, JointWithItselfEqualsMarginal) {
  const SquareArray a = pair_array({3, -1, -1, -1, 0}, {1, 2, 3, 4, 5});
  const ProbEstimate m = mc_small_ball(a, 1, 2, 20000, 4);
  const ProbEstimate j = mc_joint_small_ball(a, a, 1, 1, 2, 2, 20000, 4);
  EXPECT_EQ(m.hits, j.hits);
  const SquareArray deg = pair_array({1, 1, 1}, {1, 2, 3});
  EXPECT_EQ(mc_joint_small_ball(deg, deg, 6, 7, 0, 0, 1000, 1).hits, 0u);
  EXPECT_THROW(mc_joint_small_ball(a, deg, 0, 0, 1, 1, 10, 1), ArgumentError);
}

TEST(MonteCarlo, JointReportIsBelowEachMarginal) {
  const SquareArray a1 = pair_array({2, -1, -1, 1, -1}, {1, 2, 3, 4, 5});
  const SquareArray a2 = pair_array({2, -1, -1, 1, -1}, {1, 4, 9, 16, 25});
  const JointEstimate r = mc_joint_report(a1, a2, 0, 0, 2, 6, 50000, 8);
  EXPECT_LE(r.joint.hits, r.first.hits);
  EXPECT_LE(r.joint.hits, r.second.hits);
}

TEST(MonteCarlo, CoverageOfConfidenceIntervals) {
  // Across 100 random instances the 99% interval should miss the exact value rarely.
  std::mt19937_64 g(123);
  int misses = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const SquareArray a = oracle::random_array(g, 5, 3, 1);
    const Rational radius(1);
    const Rational exact = exact_small_ball(a, 0, radius);
    const ProbEstimate e = mc_small_ball(a, 0, radius, 4000, 1000 + rep);
    const double p = exact.get_d();
    if (p < e.ci_low || p > e.ci_high) ++misses;
  }
  EXPECT_LE(misses, 5);
}

TEST(MonteCarlo, RealGridsAreDeterministicAcrossWorkers) {
  const RealPair p = to_real(make_pair(ints({1, -1, 1, -1, 1, -1}), linear_values(6)));
  const std::vector<double> centers{-0.5, 0.0, 0.5};
  const std::vector<double> thr{0.5, 1.0};
  McOptions one, many;
  one.workers = 1;
  many.workers = 3;
  const auto a = mc_small_ball_grid(p, centers, 1.0 / 6, 30000, 2, one);
  const auto b = mc_small_ball_grid(p, centers, 1.0 / 6, 30000, 2, many);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].hits, b[i].hits);
  // Sign-symmetric weights make the law of S symmetric.
  EXPECT_NEAR(a[0].point, a[2].point, 0.02);
  const auto t1 = mc_tail_grid(p, 0.0, thr, 30000, 2, one);
  const auto t2 = mc_tail_grid(p, 0.0, thr, 30000, 2, many);
  for (std::size_t i = 0; i < t1.size(); ++i) EXPECT_EQ(t1[i].hits, t2[i].hits);
  EXPECT_GE(t1[0].hits, t1[1].hits);
}

}  // namespace
}  // namespace permlo
