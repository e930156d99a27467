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

#include <algorithm>
#include <cmath>
#include <ctime>
#include <numeric>
#include <sstream>

#include "permlo/core/enumeration.hpp"
#include "permlo/core/instance.hpp"
#include "permlo/core/monte_carlo.hpp"
#include "permlo/error.hpp"
#include "permlo/io.hpp"
#include "permlo/rational.hpp"
#include "permlo_cli/cli.hpp"

namespace permlo::cli {

namespace {

// Keeps the weight shuffle off the streams used for permutation trials.
constexpr std::uint64_t kWeightStream = 0x9E3779B97F4A7C15ull;

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<double> value_vector(std::size_t n, const std::vector<long>& poly) {
  const auto exact = polynomial_values(n, poly);
  std::vector<double> out;
  out.reserve(n);
  for (const auto& x : exact) out.push_back(to_double(x));
  return out;
}

// Literal non-degeneracy check: sum 0, unit norm, max |w_i - w_j| <= 1 / (A sqrt(log n)).
bool nondegenerate(const std::vector<double>& w, double a_const) {
  double sum = 0, sq = 0, lo = w[0], hi = w[0];
  for (double x : w) {
    sum += x;
    sq += x * x;
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  const double n = static_cast<double>(w.size());
  return std::fabs(sum) <= 1e-9 && std::fabs(sq - 1) <= 1e-9 && hi - lo <= 1.0 / (a_const * std::sqrt(std::log(n)));
}

std::string fmt(double x) { return format_double(x); }
std::string fmt(std::uint64_t x) { return std::to_string(x); }

void validate(const SweepConfig& cfg) {
  static const std::vector<std::string> modes{"subgaussian", "small-ball", "joint", "scale-3/2", "scale-5/2"};
  detail::require(std::find(modes.begin(), modes.end(), cfg.mode) != modes.end(),
                  "unknown sweep mode '" + cfg.mode + "'");
  detail::require(!cfg.n_list.empty(), "sweep needs a nonempty n list");
  for (auto n : cfg.n_list) detail::require(n >= 2, "sweep sizes must be at least 2");
  detail::require(!cfg.l_grid.empty(), "sweep needs a nonempty L grid");
  if (cfg.mode == "joint") detail::require(!cfg.l2_grid.empty(), "joint sweep needs a nonempty L2 grid");
  detail::require(cfg.v_kind == "linear" || cfg.v_kind == "poly", "v generator must be linear or poly");
  detail::require(cfg.trials > 0, "trials must be positive");
  detail::require(cfg.a_const > 0, "A must be positive");
  detail::require(cfg.confidence > 0 && cfg.confidence < 1, "confidence must lie in (0, 1)");
  if (cfg.v_kind == "poly") detail::require(cfg.poly.size() >= 2 && cfg.poly.back() != 0, "poly needs degree >= 1");
  if (cfg.mode == "scale-5/2")
    for (auto n : cfg.n_list)
      if (n > cfg.cap)
        throw CapacityError("scale-5/2 enumerates n! permutations; n = " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cfg.cap));
}

std::string small_ball_sweep(const SweepConfig& cfg, std::vector<std::string>* warnings, CsvWriter& csv) {
  const bool fine = cfg.mode == "scale-3/2";
  const double exponent = fine ? 1.5 : 1.0;
  McOptions opt{cfg.confidence, cfg.workers};
  for (auto n : cfg.n_list) {
    RealPair p{sweep_weights(n, cfg.seed), cfg.v_kind == "poly" ? value_vector(n, cfg.poly) : value_vector(n, {0, 1})};
    const bool ok = nondegenerate(p.w, cfg.a_const);
    if (!ok && warnings)
      warnings->push_back("n = " + std::to_string(n) + ": weights violate the non-degeneracy condition with A = " +
                          fmt(cfg.a_const));
    const double scale = std::pow(static_cast<double>(n), exponent);
    const double delta = 1.0 / scale;
    const auto est = mc_small_ball_grid(p, cfg.l_grid, delta, cfg.trials, cfg.seed, opt);
    for (std::size_t k = 0; k < cfg.l_grid.size(); ++k) {
      const double L = cfg.l_grid[k];
      const auto& e = est[k];
      const double scaled = e.point * scale;
      csv.add_row({std::to_string(n), fmt(L), fmt(delta), fmt(e.hits), fmt(e.trials), fmt(e.point), fmt(e.ci_low),
                   fmt(e.ci_high), fmt(scaled), fmt(std::log(scaled)), fmt(std::exp(-L * L) / scale),
                   ok ? "1" : "0"});
    }
  }
  return csv.str();
}

std::string joint_sweep(const SweepConfig& cfg, std::vector<std::string>* warnings, CsvWriter& csv) {
  McOptions opt{cfg.confidence, cfg.workers};
  const std::vector<long> p1 = cfg.v_kind == "poly" ? cfg.poly : std::vector<long>{0, 0, 1};
  // The companion sequence has one degree less, with the same leading coefficient scaled down.
  std::vector<long> p2(p1.size() - 1, 0);
  p2.back() = p1.back();
  for (auto n : cfg.n_list) {
    const auto w = sweep_weights(n, cfg.seed);
    const bool ok = nondegenerate(w, cfg.a_const);
    if (!ok && warnings)
      warnings->push_back("n = " + std::to_string(n) + ": weights violate the non-degeneracy condition with A = " +
                          fmt(cfg.a_const));
    const auto v1 = value_vector(n, p1);
    const auto v2 = value_vector(n, p2);
    const double nd = static_cast<double>(n);
    const double r = 1.0 / nd;
    const JointGrid g = mc_joint_grid(w, v1, v2, cfg.l_grid, cfg.l2_grid, r, r, cfg.trials, cfg.seed, opt);
    for (std::size_t i = 0; i < cfg.l_grid.size(); ++i)
      for (std::size_t j = 0; j < cfg.l2_grid.size(); ++j) {
        const auto& jt = g.joint[i * cfg.l2_grid.size() + j];
        const auto& f = g.first[i];
        const auto& s = g.second[j];
        const double L1 = cfg.l_grid[i], L2 = cfg.l2_grid[j];
        const bool inclusion = jt.hits <= f.hits && jt.hits <= s.hits;
        csv.add_row({std::to_string(n), fmt(L1), fmt(L2), fmt(r), fmt(jt.hits), fmt(jt.trials), fmt(jt.point),
                     fmt(jt.ci_low), fmt(jt.ci_high), fmt(f.point), fmt(s.point), fmt(f.point * s.point),
                     fmt(jt.point * nd * nd), inclusion ? "1" : "0", fmt(g.comparison.point),
                     fmt(g.comparison.ci_high), fmt(std::exp(-L1 * L1 - L2 * L2) / (nd * nd)), ok ? "1" : "0"});
      }
  }
  return csv.str();
}

std::string atom_sweep(const SweepConfig& cfg, CsvWriter& csv) {
  for (auto n : cfg.n_list) {
    std::vector<Rational> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<long>(i + 1);
    const auto pair = make_pair(w, w);
    EnumerationOptions opt;
    opt.cap = cfg.cap;
    opt.workers = cfg.workers;
    const AtomDistribution dist = exact_atom_distribution(SquareArray::from_pair(pair), opt);
    const Rational rho = exact_rho(dist);
    const double nd = static_cast<double>(n);
    const double scale = std::pow(nd, 2.5);
    csv.add_row({std::to_string(n), to_string(dist.max_count()), to_string(dist.total), to_string(rho),
                 fmt(to_double(rho)), fmt(to_double(rho) * scale), fmt(std::log(nd) / scale)});
  }
  return csv.str();
}

}  // namespace

std::vector<double> sweep_weights(std::size_t n, std::uint64_t seed) {
  const auto r = conditioned_rademacher(n, static_cast<long>(n % 2), seed ^ kWeightStream);
  const double mean = static_cast<double>(n % 2) / static_cast<double>(n);
  std::vector<double> w(n);
  double sq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = static_cast<double>(r[i]) - mean;
    sq += w[i] * w[i];
  }
  const double norm = std::sqrt(sq);
  for (auto& x : w) x /= norm;
  return w;
}

std::string run_sweep(const SweepConfig& cfg, std::vector<std::string>* warnings) {
  validate(cfg);
  std::vector<std::string> local;
  if (warnings == nullptr) warnings = &local;
  std::string body;
  std::vector<std::string> header;
  if (cfg.mode == "joint") {
    header = {"n", "L1", "L2", "delta", "hits", "trials", "joint", "joint_ci_low", "joint_ci_high", "first",
              "second", "marginal_product", "joint_n2", "joint_le_marginals", "comparison", "comparison_ci_high",
              "subgaussian_joint_ref", "condition_ok"};
  } else if (cfg.mode == "scale-5/2") {
    header = {"n", "max_count", "total", "rho", "rho_double", "rho_n52", "log_n_over_n52_ref"};
  } else {
    header = {"n", "L", "delta", "hits", "trials", "estimate", "ci_low", "ci_high", "scaled_estimate",
              "log_scaled_estimate", "subgaussian_ref", "condition_ok"};
  }
  CsvWriter csv(header);
  if (cfg.timestamp) csv.add_comment("generated " + utc_timestamp());
  std::ostringstream params;
  params << "sweep " << cfg.mode << " trials=" << cfg.trials << " seed=" << cfg.seed << " v=" << cfg.v_kind
         << " A=" << fmt(cfg.a_const);
  csv.add_comment(params.str());

  // Warnings are known before sampling, so they precede the header.
  if (cfg.mode != "scale-5/2")
    for (auto n : cfg.n_list)
      if (!nondegenerate(sweep_weights(n, cfg.seed), cfg.a_const))
        csv.add_comment("warning: n = " + std::to_string(n) + " weights violate the non-degeneracy condition");

  if (cfg.mode == "joint") return joint_sweep(cfg, warnings, csv);
  if (cfg.mode == "scale-5/2") return atom_sweep(cfg, csv);
  return small_ball_sweep(cfg, warnings, csv);
}

}  // namespace permlo::cli
