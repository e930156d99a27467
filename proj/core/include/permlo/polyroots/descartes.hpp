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

#ifndef PERMLO_POLYROOTS_DESCARTES_HPP
#define PERMLO_POLYROOTS_DESCARTES_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "permlo/polyroots/polynomial.hpp"
#include "permlo/rational.hpp"

namespace permlo {

/// c_m = sum_{i=1}^m C(m - i + t - 1, t - 1) a_i for m = 1..m_max (a_i = 0 past the end).
/// These are the coefficients of A(x) / (1 - x)^t, where A(x) = sum a_i x^{i-1}.
std::vector<BigInt> descartes_c_sequence(std::span<const BigInt> a, unsigned t, std::size_t m_max);

/// Sign changes with zeros skipped.
std::size_t sign_changes(std::span<const BigInt> c);

/// The coefficient vectors whose roots in (0, 1) are the roots of A in
/// (0, 1), (-1, 0), (1, inf) and (-inf, -1) respectively: a, alternated a,
/// reversed a, reversed alternated a.
std::array<std::vector<BigInt>, 4> four_vectors(std::span<const BigInt> a);

struct DescartesReport {
  int vector_id = 0;  // 1..4, in the order of four_vectors
  unsigned t_param = 0;
  std::size_t sign_changes = 0;  // of c_1..c_{m_max}
  /// m <= m_max with |c_m at t| < |c_m at t - 1|.
  std::size_t events = 0;
  /// sign_changes + t - 1: bounds the roots of this vector's polynomial in (0, 1).
  std::size_t bound = 0;
};

struct DescartesBound {
  std::array<DescartesReport, 4> vectors{};
  /// 4 (t - 1) + sum of sign changes: bounds the distinct roots outside {-1, 0, 1}.
  std::size_t bound_total = 0;
};

/// Bound for the polynomial with ascending coefficient vector a. m_max = 0 means the
/// vector length; smaller values are rejected since the tail argument needs m_max >= |a|.
DescartesBound descartes_bound(std::span<const BigInt> a, unsigned t, std::size_t m_max = 0);

/// Bound for P^{(d)} where P has nominal degree n (its vector has n - d + 1 entries, the
/// constant term included). t = 0 selects the default d + 2.
DescartesBound descartes_bound(const IntPolynomial& p, std::size_t n, unsigned d, unsigned t = 0);

/// S_{t,d}(m) = sum_{i=0}^m (-1)^i C(m - i + t, t) (i + d)_d.
BigInt alternating_sum_S(unsigned t, unsigned d, unsigned m);

}  // namespace permlo

#endif  // PERMLO_POLYROOTS_DESCARTES_HPP
