//
// Copyright 2026 The adalab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <vector>

#include "adalab/mechanisms/noise_spec.h"
#include "adalab/signopt/margin.h"
#include "adalab/signopt/operator_a.h"
#include "adalab/signopt/optimal_noise.h"
#include "benchmark/benchmark.h"

namespace adalab::signopt {
namespace {

void BM_OperatorAApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const UniformGrid grid{-20.0, 40.0 / (n - 1), n};
  std::vector<double> f(n);
  for (int i = 0; i < n; ++i) f[i] = grid.point(i) * grid.point(i);
  for (auto _ : state) {
    auto applied = OperatorAApply(f, grid, 1.0);
    benchmark::DoNotOptimize(applied);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_OperatorAApply)->RangeMultiplier(2)->Range(401, 3201)->Complexity();

void BM_MarginRiskUniform(benchmark::State& state) {
  const double w = static_cast<double>(state.range(0));
  auto p = Discretize(mechanisms::NoiseSpec::Uniform(0.0, w), 2001,
                      1.1 * 1.7320508075688772 * w + 8.0);
  for (auto _ : state) {
    auto margin = MarginRisk(*p, 1.0);
    benchmark::DoNotOptimize(margin);
  }
}
BENCHMARK(BM_MarginRiskUniform)->Arg(1)->Arg(10)->Arg(100)
    ->Unit(benchmark::kMillisecond);

void BM_SolveOptimalNoise(benchmark::State& state) {
  GridConfig grid;
  grid.n_points = static_cast<int>(state.range(1));
  const double w = static_cast<double>(state.range(0));
  for (auto _ : state) {
    auto solved = SolveOptimalNoise(1.0, w, grid);
    benchmark::DoNotOptimize(solved);
  }
}
BENCHMARK(BM_SolveOptimalNoise)
    ->Args({2, 201})
    ->Args({10, 401})
    ->Args({50, 401})
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace adalab::signopt

BENCHMARK_MAIN();
