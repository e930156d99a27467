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

#ifndef PERMLO_DIO_HPP
#define PERMLO_DIO_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace permlo {

/// ||x||_{R/Z} = |x - round(x)|, rounding half to even.
double circle_norm(double x);
long double circle_norm(long double x);

/// A nonempty subset of {-n..n}, sorted and without repeats.
struct IndexSet {
  std::vector<long> elements;
  long n = 0;

  double density() const { return static_cast<double>(elements.size()) / static_cast<double>(n); }
};

/// Sorts and deduplicates; throws ArgumentError if empty, n < 1 or out of {-n..n}.
IndexSet make_index_set(std::vector<long> elements, long n);

/// {lo..hi} inside {-n..n}.
IndexSet index_range(long lo, long hi, long n);

/// sum_{r in I} ||b r + b0||^2.
double wraparound_sum(const IndexSet& I, double b, double b0);

/// sum_{r in I} ||(c_0 r^d + c_1 r^{d-1} + ... + c_d) / n_scale||^2 with c given in
/// descending order (c_0 = b, c_1 = b', ...) and d = c.size() - 1 >= 1.
/// With two coefficients and n_scale = 1 this is exactly wraparound_sum(I, c_0, c_1).
double wraparound_poly_sum(const IndexSet& I, std::span<const double> descending, double n_scale);

/// counts[r + 2n] = #{(x, y) in I^2 : x - y = r} for r in {-2n..2n}. Large sets use an FFT
/// autocorrelation, small ones a direct pair loop; both give identical integers.
std::vector<std::uint64_t> difference_counts(const IndexSet& I);

/// Every r with at least c_rep representations r = x - y, x, y in I, in increasing order.
std::vector<long> common_difference_set(const IndexSet& I, std::uint64_t c_rep);

struct WeylDetection {
  std::uint64_t q = 1;
  std::vector<double> residuals;  // ||q alpha_i|| for i = 0..d
  double score = 0.0;             // max_{i >= 1} residuals[i] n^i
  double normalized_sum = 0.0;    // (1/n) |sum_{k in I} e(P(k))|
};

/// (1/n) |sum_{k in I} e(sum_i alpha_i k^i)| with alpha in ascending order.
double normalized_exponential_sum(const IndexSet& I, std::span<const double> ascending_alpha);

/// When the normalized sum is at least delta, the q in 1..q_max minimizing
/// max_{1 <= i <= d} ||q alpha_i|| n^i (smallest q on ties). alpha_0 only rotates the sum,
/// so it is reported but not scored. Returns nullopt below delta.
std::optional<WeylDetection> weyl_inverse_detect(const IndexSet& I, std::span<const double> ascending_alpha,
                                                 double delta, std::uint64_t q_max = 100);

}  // namespace permlo

#endif  // PERMLO_DIO_HPP
