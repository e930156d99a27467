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
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "permlo/permlo.hpp"
#include "permlo_cli/cli.hpp"

namespace permlo::cli {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Common {
  std::string out;
  bool no_timestamp = false;
  unsigned workers = 0;
  std::uint64_t seed = 1;
  std::uint64_t trials = 100000;
  double confidence = 0.99;
};

struct InstanceArgs {
  std::string file;
  std::size_t n = 0;
  std::string w_kind = "rademacher";  // rademacher | linear | identity | extremal
  std::string v_kind = "linear";      // linear | identity | poly
  std::string poly = "0,1";
  long rademacher_k = 0;
  std::uint64_t gen_seed = 1;
};

void add_common(CLI::App* app, Common& c, bool sampling) {
  app->add_option("--out", c.out, "Output file, written atomically (default: stdout)");
  app->add_flag("--no-timestamp", c.no_timestamp, "Omit the generation timestamp");
  app->add_option("--workers", c.workers, "Worker threads (default: PERMLO_WORKERS or all cores)");
  if (sampling) {
    app->add_option("--seed", c.seed, "Base seed");
    app->add_option("--trials", c.trials, "Monte Carlo trials");
    app->add_option("--confidence", c.confidence, "Confidence level of the intervals");
  }
}

void add_instance(CLI::App* app, InstanceArgs& a) {
  app->add_option("--file", a.file, "Instance JSON file")->check(CLI::ExistingFile);
  app->add_option("--n", a.n, "Size of a generated instance");
  app->add_option("--w", a.w_kind, "Weight generator: rademacher, linear, identity, extremal");
  app->add_option("--v", a.v_kind, "Value generator: linear (i/n), identity (i), poly (P(i)/n^d)");
  app->add_option("--poly", a.poly, "Ascending integer coefficients of P, comma separated");
  app->add_option("--rademacher-k", a.rademacher_k, "Coordinate sum of the +-1 weights");
  app->add_option("--gen-seed", a.gen_seed, "Seed of the weight shuffle");
}

InstanceFile build_instance(const InstanceArgs& a) {
  if (!a.file.empty()) return load_instance(a.file);
  detail::require(a.n >= 1, "give --file or a generated instance size --n");
  const std::size_t n = a.n;
  WeightValuePair pair;
  if (a.w_kind == "extremal") {
    pair = extremal_pair(n);
  } else {
    std::vector<Rational> w(n), v;
    if (a.w_kind == "rademacher") {
      const auto r = conditioned_rademacher(n, a.rademacher_k, a.gen_seed);
      for (std::size_t i = 0; i < n; ++i) w[i] = r[i];
    } else if (a.w_kind == "linear") {
      w = linear_values(n);
    } else if (a.w_kind == "identity") {
      for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<long>(i + 1);
    } else {
      throw ArgumentError("unknown weight generator '" + a.w_kind + "'");
    }
    if (a.v_kind == "linear") {
      v = linear_values(n);
    } else if (a.v_kind == "identity") {
      v.resize(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<long>(i + 1);
    } else if (a.v_kind == "poly") {
      v = polynomial_values(n, parse_long_list(a.poly));
    } else {
      throw ArgumentError("unknown value generator '" + a.v_kind + "'");
    }
    pair = make_pair(std::move(w), std::move(v));
  }
  InstanceFile f;
  f.array = SquareArray::from_pair(pair);
  f.pair = std::move(pair);
  return f;
}

Rational rational_arg(const std::string& text, const std::string& name) {
  try {
    return parse_rational(text);
  } catch (const ArgumentError& e) {
    throw ArgumentError("--" + name + ": " + e.what());
  }
}

json estimate_json(const ProbEstimate& e) {
  return {{"hits", e.hits}, {"trials", e.trials}, {"point", e.point}, {"ci_low", e.ci_low},
          {"ci_high", e.ci_high}, {"confidence", e.confidence}, {"seed", e.seed}};
}

/// One finished output: the document and an optional short summary for the terminal.
struct Result {
  std::string document;
  std::vector<std::pair<std::string, std::string>> summary;
  std::vector<std::pair<std::string, std::string>> extra_files;  // (path, content)
};

std::string dump(ordered_json doc) { return doc.dump(2) + "\n"; }

void stamp(ordered_json& doc, const Common& c) {
  if (!c.no_timestamp) doc["generated"] = utc_timestamp();
}

std::string csv_stamp(CsvWriter& csv, const Common& c) {
  if (!c.no_timestamp) csv.add_comment("generated " + utc_timestamp());
  return {};
}

// ---- subcommands ----

Result cmd_rho(const Common& c, const InstanceArgs& ia, std::size_t cap) {
  const InstanceFile inst = build_instance(ia);
  EnumerationOptions opt;
  opt.cap = cap;
  opt.workers = c.workers;
  const AtomDistribution dist = exact_atom_distribution(inst.array, opt);
  const Rational rho = exact_rho(dist);
  const std::size_t n = inst.array.n();
  ordered_json doc;
  doc["command"] = "rho";
  doc["n"] = n;
  doc["rho"] = to_string(rho);
  doc["rho_double"] = to_double(rho);
  doc["max_count"] = to_string(dist.max_count());
  doc["total"] = to_string(dist.total);
  doc["distinct_values"] = dist.atoms.size();
  Result r;
  r.summary = {{"n", std::to_string(n)}, {"rho", to_string(rho)}};
  if (n >= 2) {
    doc["sharp_atom_bound"] = to_string(sharp_atom_bound(n));
    r.summary.emplace_back("sharp_atom_bound", to_string(sharp_atom_bound(n)));
  }
  stamp(doc, c);
  r.document = dump(doc);
  return r;
}

Result cmd_small_ball(const Common& c, const InstanceArgs& ia, const std::string& center_text,
                      const std::string& radius_text, bool exact, std::size_t cap) {
  const InstanceFile inst = build_instance(ia);
  const Rational center = rational_arg(center_text, "center");
  const Rational radius = rational_arg(radius_text, "radius");
  detail::require(radius >= 0, "--radius must be nonnegative");
  ordered_json doc;
  doc["command"] = "small-ball";
  doc["n"] = inst.array.n();
  doc["center"] = to_string(center);
  doc["radius"] = to_string(radius);
  Result r;
  if (exact) {
    EnumerationOptions opt;
    opt.cap = cap;
    opt.workers = c.workers;
    const Rational p = exact_small_ball(inst.array, center, radius, opt);
    doc["method"] = "exact";
    doc["probability"] = to_string(p);
    doc["probability_double"] = to_double(p);
    r.summary = {{"probability", to_string(p)}};
  } else {
    detail::require(c.trials > 0, "--trials must be positive");
    const ProbEstimate e = mc_small_ball(inst.array, center, radius, c.trials, c.seed, {c.confidence, c.workers});
    doc["method"] = "monte_carlo";
    doc["estimate"] = estimate_json(e);
    r.summary = {{"estimate", format_double(e.point)},
                 {"ci", "[" + format_double(e.ci_low) + ", " + format_double(e.ci_high) + "]"}};
  }
  stamp(doc, c);
  r.document = dump(doc);
  return r;
}

Result cmd_cf(const Common& c, const InstanceArgs& ia, const std::string& grid_text, std::size_t cap) {
  const InstanceFile inst = build_instance(ia);
  const auto ts = parse_grid(grid_text);
  CfOptions opt;
  opt.cap = cap;
  opt.workers = c.workers;
  const auto samples = exact_cf_grid(inst.array, ts, opt);
  const QuadrupleTable table(inst.array);
  CsvWriter csv({"t", "re", "im", "modulus", "roos_power", "roos_exp"});
  csv_stamp(csv, c);
  csv.add_comment("cf n=" + std::to_string(inst.array.n()));
  for (const auto& s : samples)
    csv.add_row({format_double(s.t), format_double(s.value.real()), format_double(s.value.imag()),
                 format_double(s.modulus), format_double(roos_bound_power(table, s.t)),
                 format_double(roos_exp_bound(table, s.t / (2 * std::numbers::pi)))});
  Result r;
  r.document = csv.str();
  r.summary = {{"rows", std::to_string(csv.rows())}};
  return r;
}

Result cmd_gap_check(const Common& c, const InstanceArgs& ia, const std::string& gap_file,
                     const std::string& alpha_text, double c_cheb) {
  const InstanceFile inst = build_instance(ia);
  const Gap q = load_gap(gap_file);
  const Rational alpha = rational_arg(alpha_text, "alpha");
  detail::require(alpha >= 0, "--alpha must be nonnegative");
  CoverageOptions opt;
  opt.workers = c.workers;
  const CoverageReport cov =
      inst.pair ? quadruple_coverage(*inst.pair, q, alpha, opt) : quadruple_coverage(inst.array, q, alpha, opt);
  ordered_json doc;
  doc["command"] = "gap-check";
  doc["n"] = inst.array.n();
  doc["rank"] = q.rank();
  doc["volume"] = to_string(q.volume());
  doc["symmetric"] = q.symmetric();
  doc["proper"] = is_proper(q, opt.gap);
  doc["alpha"] = to_string(alpha);
  doc["covered"] = cov.covered;
  doc["total"] = cov.total;
  doc["fraction"] = to_string(cov.fraction);
  try {
    doc["pigeonhole_bound"] = gap_pigeonhole_bound(inst.array, q, c_cheb, opt);
  } catch (const PreconditionError& e) {
    doc["pigeonhole_bound"] = nullptr;
    doc["pigeonhole_unavailable"] = e.what();
  }
  stamp(doc, c);
  Result r;
  r.document = dump(doc);
  r.summary = {{"covered", std::to_string(cov.covered) + "/" + std::to_string(cov.total)},
               {"proper", doc["proper"].get<bool>() ? "yes" : "no"}};
  return r;
}

Result cmd_lcd(const Common& c, const InstanceArgs& ia, double gamma, std::optional<double> kappa, LcdGrid grid,
               std::optional<double> delta, double c_lcd) {
  const InstanceFile inst = build_instance(ia);
  detail::require(inst.pair.has_value(), "lcd needs a weight/value instance (w and v)");
  const double k = kappa.value_or(default_kappa(inst.pair->n()));
  const LcdResult res = lcd_estimate(*inst.pair, gamma, k, grid);
  ordered_json doc;
  doc["command"] = "lcd";
  doc["n"] = inst.pair->n();
  doc["gamma"] = gamma;
  doc["kappa"] = k;
  doc["norm"] = QuadVector(*inst.pair).norm2();
  doc["found"] = res.found;
  doc["lcd"] = res.d_star;
  doc["d_below"] = res.d_below;
  doc["achieved_dist"] = res.achieved_dist;
  doc["threshold"] = res.threshold;
  doc["final_step"] = res.final_step;
  doc["d_max"] = grid.d_max;
  Result r;
  r.summary = {{"lcd", format_double(res.d_star)}, {"found", res.found ? "yes" : "no"}};
  if (delta) {
    const double b = lcd_small_ball_bound(*inst.pair, gamma, k, *delta, c_lcd, grid);
    doc["delta"] = *delta;
    doc["c_lcd"] = c_lcd;
    doc["small_ball_bound"] = b;
    r.summary.emplace_back("small_ball_bound", format_double(b));
  }
  stamp(doc, c);
  r.document = dump(doc);
  return r;
}

Result cmd_dio(const Common& c, long n, std::optional<long> lo, std::optional<long> hi, const std::string& b_grid,
               double b0, const std::string& lower) {
  detail::require(n >= 1, "--n must be positive");
  const IndexSet I = index_range(lo.value_or(-n), hi.value_or(n), n);
  const auto bs = parse_grid(b_grid);
  std::vector<double> tail;
  if (!lower.empty())
    for (long x : parse_long_list(lower)) tail.push_back(static_cast<double>(x));
  CsvWriter csv({"b", "value", "value_over_n"});
  csv_stamp(csv, c);
  csv.add_comment("dio n=" + std::to_string(n) + " |I|=" + std::to_string(I.elements.size()));
  for (double b : bs) {
    double value;
    if (tail.empty()) {
      value = wraparound_sum(I, b, b0);
    } else {
      std::vector<double> coeffs{b};
      coeffs.insert(coeffs.end(), tail.begin(), tail.end());
      const double scale = std::pow(static_cast<double>(n), static_cast<double>(coeffs.size()) - 2.0);
      value = wraparound_poly_sum(I, coeffs, scale);
    }
    csv.add_row({format_double(b), format_double(value), format_double(value / static_cast<double>(n))});
  }
  Result r;
  r.document = csv.str();
  r.summary = {{"rows", std::to_string(csv.rows())}};
  return r;
}

Result cmd_roots(const Common& c, const std::vector<std::size_t>& ns, const std::vector<unsigned>& ds,
                 const std::string& weights_file, std::optional<long> rademacher_k, std::uint64_t gen_seed, unsigned t,
                 const std::string& jsonl_path) {
  detail::require(c.trials > 0, "--trials must be positive");
  detail::require(!ds.empty(), "--d needs at least one value");
  std::vector<std::vector<BigInt>> weights;
  if (!weights_file.empty()) {
    detail::require(!rademacher_k.has_value(), "give either --weights-file or --rademacher-k");
    const auto w = load_weights(weights_file);
    detail::require(ns.empty() || (ns.size() == 1 && ns[0] == w.size()), "--n disagrees with the weight file");
    weights.push_back(clear_denominators(w));
  } else {
    detail::require(!ns.empty(), "give --n with --rademacher-k, or --weights-file");
    for (auto n : ns) {
      const auto r = conditioned_rademacher(n, rademacher_k.value_or(static_cast<long>(n % 2)), gen_seed);
      weights.emplace_back(r.begin(), r.end());
    }
  }
  for (const auto& w : weights)
    for (auto d : ds) detail::require(d <= w.size(), "derivative order exceeds n");

  CsvWriter csv({"n", "d", "t", "trials", "mean_roots", "ci_low", "ci_high", "mean_nonspecial", "log_n",
                 "ratio", "ratio_ci_high", "descartes_violations", "kac_ref", "kac_derivative_ref"});
  csv_stamp(csv, c);
  csv.add_comment("roots trials=" + std::to_string(c.trials) + " seed=" + std::to_string(c.seed));
  std::string jsonl;
  if (!c.no_timestamp && !jsonl_path.empty()) jsonl += json{{"generated", utc_timestamp()}}.dump() + "\n";
  RootExperimentOptions opt;
  opt.t = t;
  opt.confidence = c.confidence;
  opt.workers = c.workers;
  opt.keep_samples = !jsonl_path.empty();
  Result r;
  for (const auto& w : weights)
    for (auto d : ds) {
      const RootCountReport rep = mc_expected_roots(w, d, c.trials, c.seed, opt);
      const double ln = rep.log_n;
      csv.add_row({std::to_string(rep.n), std::to_string(d), std::to_string(rep.t), std::to_string(c.trials),
                   format_double(rep.total.mean), format_double(rep.total.ci_low), format_double(rep.total.ci_high),
                   format_double(rep.nonspecial.mean), format_double(ln), format_double(rep.ratio),
                   format_double(rep.ratio_ci_high), std::to_string(rep.descartes_violations),
                   format_double(2 / std::numbers::pi * ln),
                   format_double((1 + std::sqrt(1.0 + 2.0 * d)) / std::numbers::pi * ln)});
      for (const auto& s : rep.samples)
        jsonl += json{{"n", rep.n},
                      {"d", d},
                      {"trial", s.trial},
                      {"roots", s.total},
                      {"nonspecial", s.nonspecial},
                      {"mult_zero", s.mult_zero},
                      {"mult_one", s.mult_one},
                      {"mult_minus_one", s.mult_minus_one},
                      {"descartes_bound", s.descartes_bound},
                      {"squarefree", s.squarefree}}
                     .dump() +
                 "\n";
      r.summary.emplace_back("n=" + std::to_string(rep.n) + " d=" + std::to_string(d),
                             "mean " + format_double(rep.total.mean) + ", ratio " + format_double(rep.ratio));
    }
  r.document = csv.str();
  if (!jsonl_path.empty()) r.extra_files.emplace_back(jsonl_path, jsonl);
  return r;
}

// ---- config files ----

// A JSON config {"command": "...", "mode": "...", "<flag>": value, ...} becomes arguments.
std::vector<std::string> config_arguments(const std::string& path) {
  const json doc = [&] {
    try {
      return json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
      throw ArgumentError(std::string("config: invalid JSON: ") + e.what());
    }
  }();
  detail::require(doc.is_object() && doc.contains("command") && doc["command"].is_string(),
                  "config: needs a \"command\" string");
  std::vector<std::string> args{doc["command"].get<std::string>()};
  if (doc.contains("mode")) args.push_back(doc["mode"].get<std::string>());
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (const auto& [key, value] : doc.items()) {
    if (key == "command" || key == "mode") continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back("--" + key);
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& e : value) joined += (joined.empty() ? "" : ",") + scalar(e);
      args.push_back("--" + key + "=" + joined);
    } else {
      args.push_back("--" + key + "=" + scalar(value));
    }
  }
  return args;
}

void print_error(std::ostream& err, const std::string& kind, const std::string& message, int code) {
  err << json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << "\n";
}

void emit(const Result& r, const Common& c, std::ostream& out) {
  // Everything is computed before the first byte is written.
  for (const auto& [path, content] : r.extra_files) write_file_atomic(path, content);
  if (c.out.empty()) {
    out << r.document;
    return;
  }
  write_file_atomic(c.out, r.document);
  std::size_t width = 0;
  for (const auto& [k, v] : r.summary) width = std::max(width, k.size());
  for (const auto& [k, v] : r.summary) out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  out << "wrote " << c.out << "\n";
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  detail::require(!text.empty(), "empty grid");
  std::vector<double> out;
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    detail::require(used == s.size() && std::isfinite(x), "bad number '" + s + "' in grid '" + text + "'");
    return x;
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    detail::require(parts.size() == 3, "grid '" + text + "' must look like start:stop:step");
    const double a = number(parts[0]), b = number(parts[1]), step = number(parts[2]);
    detail::require(step > 0 && b >= a, "grid '" + text + "' needs step > 0 and stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
    detail::require(count <= 10'000'000, "grid '" + text + "' is too large");
    for (std::size_t k = 0; k < count; ++k) out.push_back(a + static_cast<double>(k) * step);
  } else {
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(number(p));
  }
  detail::require(!out.empty(), "empty grid");
  return out;
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) {
    std::size_t used = 0;
    long x = 0;
    try {
      x = std::stol(p, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    detail::require(!p.empty() && used == p.size(), "bad integer '" + p + "' in list '" + text + "'");
    out.push_back(x);
  }
  detail::require(!out.empty(), "empty integer list");
  return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  try {
    std::vector<std::string> args;
    for (std::size_t i = 0; i < raw_args.size(); ++i) {
      if (raw_args[i] == "--config" && i + 1 < raw_args.size()) {
        const auto extra = config_arguments(raw_args[++i]);
        args.insert(args.end(), extra.begin(), extra.end());
      } else if (raw_args[i].rfind("--config=", 0) == 0) {
        const auto extra = config_arguments(raw_args[i].substr(9));
        args.insert(args.end(), extra.begin(), extra.end());
      } else {
        args.push_back(raw_args[i]);
      }
    }

    CLI::App app{"Anti-concentration experiments for random permutation sums", "permlo"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    std::string config_unused;
    app.add_option("--config", config_unused, "JSON config file (keys are flag names, plus \"command\")");

    Common common;
    InstanceArgs inst;
    std::size_t cap = 10;

    auto* rho = app.add_subcommand("rho", "Exact atom probability sup_x P(S = x) by enumeration");
    add_common(rho, common, false);
    add_instance(rho, inst);
    rho->add_option("--cap", cap, "Largest n that may be enumerated");

    std::string center = "0", radius = "0";
    bool exact = false;
    auto* ball = app.add_subcommand("small-ball", "P(|S - center| <= radius), exact or Monte Carlo");
    add_common(ball, common, true);
    add_instance(ball, inst);
    ball->add_option("--center", center, "Center L (rational)");
    ball->add_option("--radius", radius, "Radius delta (rational)");
    ball->add_flag("--exact", exact, "Enumerate all permutations instead of sampling");
    ball->add_option("--cap", cap, "Largest n that may be enumerated");

    std::string t_grid = "0:3:0.1";
    std::size_t cf_cap = 16;
    auto* cf = app.add_subcommand("cf", "Characteristic function with the quadruple-difference bounds");
    add_common(cf, common, false);
    add_instance(cf, inst);
    cf->add_option("--t-grid", t_grid, "Frequencies start:stop:step or a comma list");
    cf->add_option("--cap", cf_cap, "Largest n for the permanent");

    std::string gap_file, alpha = "0";
    double c_cheb = 4.0;
    auto* gap = app.add_subcommand("gap-check", "Coverage of the quadruple differences by a GAP");
    add_common(gap, common, false);
    add_instance(gap, inst);
    gap->add_option("--gap", gap_file, "GAP JSON file")->required()->check(CLI::ExistingFile);
    gap->add_option("--alpha", alpha, "Covering radius (rational)");
    gap->add_option("--c-cheb", c_cheb, "Concentration constant C of the pigeonhole bound");

    double gamma = 0.5, c_lcd = 4.0;
    std::optional<double> kappa, delta;
    LcdGrid grid;
    auto* lcd = app.add_subcommand("lcd", "Essential least common denominator and its small-ball bound");
    add_common(lcd, common, false);
    add_instance(lcd, inst);
    lcd->add_option("--gamma", gamma, "gamma in (0, 1)");
    lcd->add_option("--kappa", kappa, "kappa >= n^{3/2} (default sqrt(2 log n) n^{3/2})");
    lcd->add_option("--dmax", grid.d_max, "Scan limit for D");
    lcd->add_option("--step", grid.step, "Coarse scan step");
    lcd->add_option("--delta", delta, "Radius for the small-ball bound");
    lcd->add_option("--c-lcd", c_lcd, "Constant of the small-ball bound");

    long dio_n = 1000;
    std::optional<long> lo, hi;
    std::string b_grid = "0.001:0.01:0.001", lower;
    double b0 = 0.0;
    auto* dio = app.add_subcommand("dio", "Wrap-around sums over an index range");
    add_common(dio, common, false);
    dio->add_option("--n", dio_n, "Range parameter n");
    dio->add_option("--lo", lo, "Smallest index (default -n)");
    dio->add_option("--hi", hi, "Largest index (default n)");
    dio->add_option("--b-grid", b_grid, "Leading coefficients b");
    dio->add_option("--b0", b0, "Constant term for the linear form");
    dio->add_option("--lower", lower, "Further descending integer coefficients b', ...; selects the polynomial sum");

    std::vector<std::size_t> root_n;
    std::vector<unsigned> root_d{0};
    std::string weights_file, jsonl;
    std::optional<long> rademacher_k;
    std::uint64_t gen_seed = 1;
    unsigned t_param = 0;
    auto* roots = app.add_subcommand("roots", "Real roots of random permutation polynomials");
    add_common(roots, common, true);
    roots->add_option("--n", root_n, "Degrees n (comma list allowed)")->delimiter(',');
    roots->add_option("--d", root_d, "Derivative orders (comma list allowed)")->delimiter(',');
    roots->add_option("--weights-file", weights_file, "Weights JSON file")->check(CLI::ExistingFile);
    roots->add_option("--rademacher-k", rademacher_k, "Coordinate sum of +-1 weights (default n mod 2)");
    roots->add_option("--gen-seed", gen_seed, "Seed of the weight shuffle");
    roots->add_option("--t", t_param, "Descartes parameter t >= 2 (default d + 2)");
    roots->add_option("--jsonl", jsonl, "Per-sample JSONL output file");

    SweepConfig sweep_cfg;
    std::string n_list = "50,100,200", l_grid = "0:3:0.5", l2_grid = "0", poly;
    auto* sweep = app.add_subcommand("sweep", "Scaling sweeps: subgaussian, small-ball, joint, scale-3/2, scale-5/2");
    add_common(sweep, common, true);
    sweep->add_option("mode", sweep_cfg.mode, "Sweep mode")
        ->required()
        ->check(CLI::IsMember({"subgaussian", "small-ball", "joint", "scale-3/2", "scale-5/2"}));
    sweep->add_option("--n-list", n_list, "Sizes, comma separated");
    sweep->add_option("--L-grid", l_grid, "Centers L (L1 for joint)");
    sweep->add_option("--L2-grid", l2_grid, "Centers L2 for joint");
    sweep->add_option("--v", sweep_cfg.v_kind, "Value generator: linear or poly");
    sweep->add_option("--poly", poly, "Ascending integer coefficients of P for --v poly");
    sweep->add_option("--A", sweep_cfg.a_const, "Constant A of the non-degeneracy check");
    sweep->add_option("--cap", sweep_cfg.cap, "Enumeration cap for scale-5/2");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      for (auto* sub : app.get_subcommands())
        if (sub->get_help_ptr() && sub->get_help_ptr()->count() > 0) {
          out << sub->help();
          return kOk;
        }
      print_error(err, "invalid_argument", e.what(), kInvalid);
      return kInvalid;
    }
    for (auto* sub : app.get_subcommands())
      if (sub->get_help_ptr() && sub->get_help_ptr()->count() > 0) {
        out << sub->help();
        return kOk;
      }

    detail::require(common.confidence > 0 && common.confidence < 1, "--confidence must lie in (0, 1)");
    Result result;
    if (rho->parsed()) {
      result = cmd_rho(common, inst, cap);
    } else if (ball->parsed()) {
      result = cmd_small_ball(common, inst, center, radius, exact, cap);
    } else if (cf->parsed()) {
      result = cmd_cf(common, inst, t_grid, cf_cap);
    } else if (gap->parsed()) {
      result = cmd_gap_check(common, inst, gap_file, alpha, c_cheb);
    } else if (lcd->parsed()) {
      result = cmd_lcd(common, inst, gamma, kappa, grid, delta, c_lcd);
    } else if (dio->parsed()) {
      result = cmd_dio(common, dio_n, lo, hi, b_grid, b0, lower);
    } else if (roots->parsed()) {
      result = cmd_roots(common, root_n, root_d, weights_file, rademacher_k, gen_seed, t_param, jsonl);
    } else if (sweep->parsed()) {
      for (long x : parse_long_list(n_list)) {
        detail::require(x >= 1, "--n-list entries must be positive");
        sweep_cfg.n_list.push_back(static_cast<std::size_t>(x));
      }
      sweep_cfg.l_grid = parse_grid(l_grid);
      sweep_cfg.l2_grid = parse_grid(l2_grid);
      if (!poly.empty()) sweep_cfg.poly = parse_long_list(poly);
      sweep_cfg.trials = common.trials;
      sweep_cfg.seed = common.seed;
      sweep_cfg.workers = common.workers;
      sweep_cfg.confidence = common.confidence;
      sweep_cfg.timestamp = !common.no_timestamp;
      std::vector<std::string> warnings;
      result.document = run_sweep(sweep_cfg, &warnings);
      for (const auto& w : warnings) err << json{{"warning", w}}.dump() << "\n";
      result.summary = {{"mode", sweep_cfg.mode}, {"sizes", n_list}};
    }
    emit(result, common, out);
    return kOk;
  } catch (const CapacityError& e) {
    print_error(err, "capacity", e.what(), kCapacity);
    return kCapacity;
  } catch (const PreconditionError& e) {
    print_error(err, "precondition", e.what(), kInvalid);
    return kInvalid;
  } catch (const ArgumentError& e) {
    print_error(err, "invalid_argument", e.what(), kInvalid);
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    print_error(err, "invalid_argument", e.what(), kInvalid);
    return kInvalid;
  } catch (const std::out_of_range& e) {
    print_error(err, "invalid_argument", e.what(), kInvalid);
    return kInvalid;
  }
}

}  // namespace permlo::cli
