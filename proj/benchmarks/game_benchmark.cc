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

#include <cstdint>

#include "adalab/adversaries/adversary.h"
#include "adalab/bounds/bounds.h"
#include "adalab/harness/game.h"
#include "adalab/harness/risk.h"
#include "adalab/mechanisms/mechanism.h"
#include "benchmark/benchmark.h"

namespace adalab {
namespace {

harness::ExperimentConfig Config(int k, adversaries::AdversaryKind kind,
                                 std::int64_t replications) {
  harness::ExperimentConfig config;
  config.k = k;
  config.mechanism = *mechanisms::DefaultSchedule(k, 1.0);
  config.adversary.kind = kind;
  config.replications = replications;
  config.seed = 1;
  return config;
}

void BM_GreedyGame(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const harness::ExperimentConfig config =
      Config(k, adversaries::AdversaryKind::kKStepGreedy, 1);
  auto adversary = adversaries::MakeAdversary(config.adversary, k);
  auto policy = mechanisms::MakeNoisePolicy(config.mechanism, k);
  std::int64_t rep = 0;
  for (auto _ : state) {
    auto game = harness::PlayGame(config, **adversary, *policy, rep++);
    benchmark::DoNotOptimize(game);
  }
  state.SetComplexityN(k);
}
BENCHMARK(BM_GreedyGame)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_BayesSignGame(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const harness::ExperimentConfig config =
      Config(k, adversaries::AdversaryKind::kBayesSign, 1);
  auto adversary = adversaries::MakeAdversary(config.adversary, k);
  auto policy = mechanisms::MakeNoisePolicy(config.mechanism, k);
  std::int64_t rep = 0;
  for (auto _ : state) {
    auto game = harness::PlayGame(config, **adversary, *policy, rep++);
    benchmark::DoNotOptimize(game);
  }
}
BENCHMARK(BM_BayesSignGame)->Arg(10)->Arg(50);

void BM_EstimateRisk(benchmark::State& state) {
  const harness::ExperimentConfig config =
      Config(10, adversaries::AdversaryKind::kKStepGreedy, state.range(0));
  for (auto _ : state) {
    auto report = harness::EstimateRisk(config, 1);
    benchmark::DoNotOptimize(report);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateRisk)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_RecursiveFkUpdate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd sigma =
      Eigen::MatrixXd::Identity(n, n) + Eigen::MatrixXd::Constant(n, n, 0.1);
  const Eigen::MatrixXd w = Eigen::MatrixXd::Identity(n, n);
  const Eigen::VectorXd v = Eigen::VectorXd::Constant(n, 0.05);
  for (auto _ : state) {
    auto f = bounds::RecursiveFkUpdate(0.3, sigma, w, v, 1.0, 1.0);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_RecursiveFkUpdate)->Arg(4)->Arg(32)->Arg(128);

}  // namespace
}  // namespace adalab

BENCHMARK_MAIN();
