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

#include <benchmark/benchmark.h>

#include <complex>
#include <numeric>
#include <vector>

#include "permlo/permlo.hpp"

namespace {

using namespace permlo;

SquareArray linear_pair(std::size_t n) {
  std::vector<Rational> w, v;
  for (std::size_t i = 1; i <= n; ++i) {
    w.emplace_back(static_cast<long>(2 * i) - static_cast<long>(n) - 1);
    v.emplace_back(static_cast<long>(i * i));
  }
  return SquareArray::from_pair(make_pair(w, v));
}

void BM_Permanent(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::complex<double>> m(n * n);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::polar(1.0, 0.37 * static_cast<double>(i));
  for (auto _ : state) benchmark::DoNotOptimize(permanent(m, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Permanent)->DenseRange(8, 20, 4);

void BM_ExactCf(benchmark::State& state) {
  const SquareArray a = linear_pair(static_cast<std::size_t>(state.range(0)));
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_cf(a, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_ExactCf)->Arg(10)->Arg(14);

void BM_Enumeration(benchmark::State& state) {
  const SquareArray a = linear_pair(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_atom_distribution(a));
  state.SetItemsProcessed(state.iterations() * factorial(static_cast<unsigned>(state.range(0))).get_si());
}
BENCHMARK(BM_Enumeration)->DenseRange(7, 9, 1)->Unit(benchmark::kMillisecond);

void BM_MonteCarloGrid(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = conditioned_rademacher(n, 0, 1);
  RealPair p;
  for (std::size_t i = 0; i < n; ++i) {
    p.w.push_back(static_cast<double>(s[i]) / std::sqrt(static_cast<double>(n)));
    p.v.push_back(static_cast<double>(i + 1) / static_cast<double>(n));
  }
  const std::vector<double> centers{0, 0.5, 1};
  McOptions opt;
  opt.workers = 1;
  constexpr std::uint64_t kTrials = 20000;
  for (auto _ : state) benchmark::DoNotOptimize(mc_small_ball_grid(p, centers, 1.0 / n, kTrials, 7, opt));
  state.SetItemsProcessed(state.iterations() * kTrials);
}
BENCHMARK(BM_MonteCarloGrid)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

IntPolynomial sample_poly(std::size_t n, std::uint64_t trial) {
  std::vector<BigInt> w;
  for (long x : conditioned_rademacher(n, 0, 3)) w.emplace_back(x);
  return sample_perm_poly(w, 5, trial);
}

void BM_RootsBisection(benchmark::State& state) {
  const IntPolynomial p = sample_poly(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(split_real_roots(p, RootCounter::bisection));
}
BENCHMARK(BM_RootsBisection)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMicrosecond);

void BM_RootsSturm(benchmark::State& state) {
  const IntPolynomial p = sample_poly(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(split_real_roots(p, RootCounter::sturm));
}
BENCHMARK(BM_RootsSturm)->RangeMultiplier(4)->Range(16, 64)->Unit(benchmark::kMillisecond);

void BM_DescartesBound(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntPolynomial p = sample_poly(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(descartes_bound(p, n, 0));
}
BENCHMARK(BM_DescartesBound)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMicrosecond);

}  // namespace

// The packaged benchmark_main archive carries LTO bytecode from another compiler release.
BENCHMARK_MAIN();
