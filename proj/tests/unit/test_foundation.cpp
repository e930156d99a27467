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

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "permlo/error.hpp"
#include "permlo/parallel.hpp"
#include "permlo/rational.hpp"
#include "permlo/rng.hpp"
#include "permlo/stats.hpp"

namespace permlo {
namespace {

TEST(Rational, ParsesFractionsIntegersAndDecimalsExactly) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational(" -7 "), Rational(-7));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("-1.5e-2"), Rational(-3, 200));
  EXPECT_EQ(parse_rational("2E3"), Rational(2000));
  EXPECT_EQ(parse_rational("+4/-8"), Rational(-1, 2));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1.2.3", "/3", "1e", "--1"})
    EXPECT_THROW(parse_rational(bad), ArgumentError) << bad;
}

TEST(Rational, RationalizeRecoversSimpleFractions) {
  EXPECT_EQ(rationalize(0.5), Rational(1, 2));
  EXPECT_EQ(rationalize(1.0 / 3.0, BigInt(1000)), Rational(1, 3));
  // Bounded denominator: the best approximation with q <= 113 is 355/113.
  EXPECT_EQ(rationalize(3.14159265358979, BigInt(113)), Rational(355, 113));
  EXPECT_EQ(rationalize(3.14159265358979, BigInt(7)), Rational(22, 7));
  EXPECT_THROW(rationalize(std::nan("")), ArgumentError);
}

TEST(Rational, BinomialAndFallingFactorial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(falling_factorial(7, 3), 210);
  EXPECT_EQ(falling_factorial(7, 0), 1);
  EXPECT_EQ(falling_factorial(2, 3), 0);
  EXPECT_EQ(factorial(10), 3628800);
}

TEST(Rational, CommonDenominatorScalesExactly) {
  std::vector<Rational> xs{Rational(1, 2), Rational(-1, 3), Rational(5)};
  const ScaledIntegers s = common_denominator(xs);
  EXPECT_EQ(s.denominator, 6);
  EXPECT_EQ(s.numerators, (std::vector<BigInt>{3, -2, 30}));
  EXPECT_TRUE(narrow_to_int64(s.numerators, BigInt(100)).has_value());
  EXPECT_FALSE(narrow_to_int64(s.numerators, BigInt(30)).has_value());
}

// Known-answer vectors of Philox4x32-10 published with the Random123 library.
TEST(Rng, PhiloxKnownAnswers) {
  EXPECT_EQ(philox4x32({0, 0, 0, 0}, {0, 0}),
            (std::array<std::uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}));
  EXPECT_EQ(philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}),
            (std::array<std::uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu}));
  EXPECT_EQ(philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}),
            (std::array<std::uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u}));
}

TEST(Rng, StreamsAreDeterministicAndDistinct) {
  Philox a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  const auto x = a(), y = b(), z = c(), w = d();
  EXPECT_EQ(x, y);
  EXPECT_NE(x, z);
  EXPECT_NE(x, w);
}

TEST(Rng, BoundedDrawsAreUniform) {
  // Chi-square over 7 cells, 70000 draws: 6 degrees of freedom, 0.999 quantile 22.46.
  Philox g(1, 0);
  std::array<long, 7> cells{};
  for (int k = 0; k < 70000; ++k) ++cells[g.below(7)];
  double chi2 = 0;
  for (long c : cells) chi2 += (c - 10000.0) * (c - 10000.0) / 10000.0;
  EXPECT_LT(chi2, 22.46);
}

TEST(Rng, UniformDoublesStayInUnitInterval) {
  Philox g(5, 5);
  for (int k = 0; k < 10000; ++k) {
    const double u = g.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Rng, SampledPermutationsCoverS3Uniformly) {
  std::map<std::vector<int>, long> seen;
  std::vector<int> p(3);
  for (std::uint64_t t = 0; t < 60000; ++t) {
    sample_permutation(std::span<int>(p), 9, t);
    ++seen[p];
  }
  ASSERT_EQ(seen.size(), 6u);
  // Each cell ~ Binomial(60000, 1/6): sd = 91.3; allow 5 sd.
  for (const auto& [perm, c] : seen) EXPECT_NEAR(c, 10000, 460);
}

TEST(Stats, ClopperPearsonKnownValues) {
  // Zero hits: upper limit 1 - (alpha/2)^(1/n).
  auto [lo, hi] = clopper_pearson(0, 100, 0.95);
  EXPECT_DOUBLE_EQ(lo, 0.0);
  EXPECT_NEAR(hi, 1 - std::pow(0.025, 0.01), 1e-12);
  auto [lo2, hi2] = clopper_pearson(100, 100, 0.95);
  EXPECT_NEAR(lo2, std::pow(0.025, 0.01), 1e-12);
  EXPECT_DOUBLE_EQ(hi2, 1.0);
  // 5 of 10 at 95%: the reference interval is [0.187086, 0.812914].
  auto [lo3, hi3] = clopper_pearson(5, 10, 0.95);
  EXPECT_NEAR(lo3, 0.187086, 1e-6);
  EXPECT_NEAR(hi3, 0.812914, 1e-6);
}

TEST(Stats, EstimateContainsPoint) {
  for (std::uint64_t h : {0ull, 1ull, 17ull, 999ull, 1000ull}) {
    const ProbEstimate e = make_estimate(h, 1000, 0.99, 3);
    EXPECT_EQ(e.point, static_cast<double>(h) / 1000.0);
    EXPECT_LE(e.ci_low, e.point);
    EXPECT_GE(e.ci_high, e.point);
    EXPECT_EQ(e.seed, 3u);
  }
}

TEST(Stats, MeanEstimateAndFit) {
  std::vector<double> xs{1, 2, 3, 4, 5};
  const MeanEstimate m = estimate_mean(xs, 0.95);
  EXPECT_DOUBLE_EQ(m.mean, 3.0);
  EXPECT_DOUBLE_EQ(m.variance, 2.5);
  EXPECT_LT(m.ci_low, 3.0);
  EXPECT_GT(m.ci_high, 3.0);
  std::vector<double> ys{3, 5, 7, 9, 11};
  const LinearFit f = fit_line(xs, ys);
  EXPECT_NEAR(f.slope, 2.0, 1e-12);
  EXPECT_NEAR(f.intercept, 1.0, 1e-12);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
}

TEST(Parallel, BlocksPartitionTheRangeAndPropagateErrors) {
  for (unsigned workers : {1u, 2u, 3u, 8u}) {
    std::vector<int> touched(101, 0);
    parallel_blocks(101, workers, [&](std::size_t b, std::size_t e, unsigned) {
      for (std::size_t i = b; i < e; ++i) ++touched[i];
    });
    for (int t : touched) ASSERT_EQ(t, 1);
  }
  EXPECT_THROW(parallel_blocks(10, 4,
                               [](std::size_t b, std::size_t, unsigned) {
                                 if (b > 0) throw ArgumentError("boom");
                               }),
               ArgumentError);
}

}  // namespace
}  // namespace permlo
