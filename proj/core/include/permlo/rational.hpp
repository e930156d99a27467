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

#ifndef PERMLO_RATIONAL_HPP
#define PERMLO_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permlo {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q", "p", or a finite decimal such as "-0.125" into an exact rational.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text ("p" when the denominator is 1).
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Closest rational with denominator at most `max_denominator` (continued fractions).
/// Used wherever a floating input has to enter an exact computation.
Rational rationalize(double x, const BigInt& max_denominator = BigInt(1) << 64);

double to_double(const Rational& q);

Rational abs(const Rational& q);
BigInt abs(const BigInt& z);

/// n! as a big integer.
BigInt factorial(unsigned n);

/// Binomial coefficient with the convention C(n, k) = 0 unless 0 <= k <= n.
BigInt binomial(long n, long k);

/// Falling factorial (x)_d = x (x - 1) ... (x - d + 1); (x)_0 = 1.
BigInt falling_factorial(long x, unsigned d);

/// Values sharing one denominator: value[i] = numerators[i] / denominator.
struct ScaledIntegers {
  BigInt denominator;
  std::vector<BigInt> numerators;
};

ScaledIntegers common_denominator(std::span<const Rational> values);

/// int64 view of a scaled vector when every |x| stays below `limit`.
std::optional<std::vector<std::int64_t>> narrow_to_int64(std::span<const BigInt> values,
                                                         const BigInt& limit);

}  // namespace permlo

#endif  // PERMLO_RATIONAL_HPP
