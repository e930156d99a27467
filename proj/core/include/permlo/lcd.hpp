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

#ifndef PERMLO_LCD_HPP
#define PERMLO_LCD_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "permlo/core/instance.hpp"

namespace permlo {

/// The n^4 vector u_{ijkl} = (v_i - v_j)(w_k - w_l), kept as the distinct v- and
/// w-differences with multiplicities so it is never materialized.
class QuadVector {
 public:
  explicit QuadVector(const WeightValuePair& pair);

  std::size_t n() const { return n_; }
  /// ||u||_2 from the closed form (2n sum v^2 - 2 (sum v)^2)(2n sum w^2 - 2 (sum w)^2), exact before the root.
  double norm2() const { return norm2_; }
  const std::vector<std::pair<double, std::uint64_t>>& v_differences() const { return dv_; }
  const std::vector<std::pair<double, std::uint64_t>>& w_differences() const { return dw_; }

 private:
  std::size_t n_;
  double norm2_;
  std::vector<std::pair<double, std::uint64_t>> dv_, dw_;
};

/// dist(D u, Z^{n^4}) = sqrt(sum ||D u_{ijkl}||^2). Requires D > 0.
double dist_to_lattice(const QuadVector& u, double D);

/// dist(D u, Z^{n^4}) - min(gamma D ||u||, kappa); negative exactly when D is in the defining set.
double lcd_slack(const QuadVector& u, double D, double gamma, double kappa);

struct LcdGrid {
  double d_max = 10.0;
  double step = 1e-3;
  int passes = 3;        // refinement passes after the coarse scan
  double factor = 10.0;  // step shrink per pass
};

struct LcdResult {
  bool found = false;     // false means LCD >= d_max on this grid
  double d_star = 0.0;    // first scanned D in the defining set (d_max when not found)
  double d_below = 0.0;   // largest scanned D below d_star, which is outside the set
  double gamma = 0.0;
  double kappa = 0.0;
  double achieved_dist = 0.0;
  double threshold = 0.0;  // min(gamma d_star ||u||, kappa)
  LcdGrid grid;
  double final_step = 0.0;
};

/// sqrt(2 log n) n^{3/2}, floored at n^{3/2}.
double default_kappa(std::size_t n);

/// Scans D = step, 2 step, ... for the first D with dist(D u) < min(gamma D ||u||, kappa),
/// then rescans the last bracket with a finer step. Requires 0 < gamma < 1, kappa >= n^{3/2}.
LcdResult lcd_estimate(const WeightValuePair& pair, double gamma, double kappa, const LcdGrid& grid = {});

/// C_lcd (delta / gamma + exp(-kappa^2 / 2n^3)). Throws PreconditionError when
/// ||u|| < n^{3/2} or delta < 1 / LCD; a grid that finds no LCD below d_max admits delta >= 1 / d_max.
double lcd_small_ball_bound(const WeightValuePair& pair, double gamma, double kappa, double delta, double c_lcd,
                            const LcdGrid& grid = {});

}  // namespace permlo

#endif  // PERMLO_LCD_HPP
