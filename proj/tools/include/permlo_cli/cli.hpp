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

#ifndef PERMLO_CLI_CLI_HPP
#define PERMLO_CLI_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace permlo::cli {

/// Exit codes of the runner.
enum ExitCode : int { kOk = 0, kInvalid = 2, kCapacity = 3 };

/// Parses "a:b:step" (inclusive, step > 0) or a comma list.
std::vector<double> parse_grid(const std::string& text);

/// Comma list of integers, e.g. "50,100,200" or ascending polynomial coefficients.
std::vector<long> parse_long_list(const std::string& text);

struct SweepConfig {
  std::string mode;  // subgaussian | small-ball | joint | scale-3/2 | scale-5/2
  std::vector<std::size_t> n_list;
  std::vector<double> l_grid{0.0};
  std::vector<double> l2_grid{0.0};  // joint only
  std::string v_kind = "linear";     // linear | poly
  std::vector<long> poly{0, 1};      // ascending coefficients of P for v_i = P(i) / n^d
  double a_const = 10.0;             // A in max |w_i - w_j| <= 1 / (A sqrt(log n))
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  double confidence = 0.99;
  std::size_t cap = 10;  // enumeration cap for scale-5/2
  bool timestamp = true;
};

/// CSV text of one sweep. Throws ArgumentError on invalid configs and CapacityError
/// past the enumeration cap, before any work is done.
std::string run_sweep(const SweepConfig& cfg, std::vector<std::string>* warnings = nullptr);

/// Sweep weights: a conditioned +-1 vector (sum n mod 2) centered and scaled to unit norm.
std::vector<double> sweep_weights(std::size_t n, std::uint64_t seed);

/// The command line runner. Results go to --out files (atomically) or to out; errors are
/// one JSON object per line on err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permlo::cli

#endif  // PERMLO_CLI_CLI_HPP
