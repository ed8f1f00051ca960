// Copyright 2026 The Authors.
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

#include <memory>
#include <vector>

#include "ossmax/greedy.hpp"
#include "ossmax/instances.hpp"
#include "ossmax/matroid.hpp"
#include "ossmax/objective.hpp"
#include "ossmax/oracle.hpp"
#include "ossmax/rng.hpp"
#include "ossmax/rounding.hpp"

namespace ossmax {
namespace {

QuadraticObjective MakeObjective(int n) {
  return GenNegativeType(n, 3, 12345);
}

void BM_EstimateSigma(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto q = MakeObjective(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(EstimateSigma(q.A()).sigma);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_EstimateSigma)->Arg(16)->Arg(32)->Arg(64)->Arg(128)->Complexity();

void BM_GradientStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto q = MakeObjective(n);
  UniformMatroid m(n, n / 2);
  std::vector<double> x(n, 0.3);
  for (auto _ : state) {
    const auto g = q.Gradient(x);
    benchmark::DoNotOptimize(m.MaxWeightIndependent(g));
  }
}
BENCHMARK(BM_GradientStep)->Arg(16)->Arg(64)->Arg(256);

void BM_OneStepGreedy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto q = MakeObjective(n);
  UniformMatroid m(n, n / 2);
  GreedyConfig cfg;
  cfg.mode = GreedyMode::kOneStep;
  cfg.sigma = EstimateSigma(q.A()).sigma;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunJumpStart(q, m, cfg).values.back());
  }
}
BENCHMARK(BM_OneStepGreedy)->Arg(16)->Arg(64)->Arg(128);

void BM_CoverageBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  UniformMatroid m(n, n / 2);
  SplitMix64 rng(7);
  const auto bases = RandomBasisDecomposition(m, 3, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        BuildQuadraticCoverage(m, bases).total_weight);
  }
}
BENCHMARK(BM_CoverageBuild)->Arg(8)->Arg(16)->Arg(32);

void BM_SwapRound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto q = MakeObjective(n);
  UniformMatroid m(n, n / 2);
  SplitMix64 rng(7);
  const auto bases = RandomBasisDecomposition(m, 3, rng);
  const double sigma = EstimateSigma(q.A()).sigma;
  for (auto _ : state) {
    benchmark::DoNotOptimize(SwapRound(q, m, bases, sigma).value);
  }
}
BENCHMARK(BM_SwapRound)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
}  // namespace ossmax

BENCHMARK_MAIN();
