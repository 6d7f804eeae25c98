// Copyright 2026 The ohedge Authors
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

#include <benchmark/benchmark.h>

#include "ohedge/game.h"
#include "ohedge/learners.h"
#include "ohedge/optimizer.h"
#include "ohedge/presets.h"

namespace ohedge {
namespace {

void BM_HedgeNext(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  OptimisticHedge learner(dim, 0.5);
  std::vector<double> u(dim, 0.0);
  u[0] = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(learner.Next());
    learner.Observe(u);
  }
}
BENCHMARK(BM_HedgeNext)->Arg(2)->Arg(100)->Arg(10000);

// One full self-play match on the adversarial instance.
void BM_PlayMatch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int horizon = static_cast<int>(state.range(1));
  const auto algorithm =
      state.range(2) == 0 ? Algorithm::kHedge : Algorithm::kAveraged;
  const PayoffMatrix a = AdversarialMatrix(2, n, 1.0);
  const RateParams r = PresetRates(Preset::kASocial, 2, n);
  for (auto _ : state) {
    auto x = MakeLearner(algorithm, 2, r.eta);
    auto y = MakeLearner(algorithm, n, r.eta_prime);
    double last = 0.0;
    PlayMatch(a, *x, *y, horizon, [&](const RoundView& v) { last = v.x[0]; });
    benchmark::DoNotOptimize(last);
  }
  state.SetItemsProcessed(state.iterations() * horizon);
}
BENCHMARK(BM_PlayMatch)
    ->Args({10000, 2000, 0})
    ->Args({10000, 2000, 1})
    ->Args({100, 2000, 0})
    ->Unit(benchmark::kMillisecond);

void BM_MinimizeMaxFg(benchmark::State& state) {
  const BoundInputs in = BoundInputs::FromActions(2, 10000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Minimize(Objective::MaxFg(), in).objective_value);
  }
}
BENCHMARK(BM_MinimizeMaxFg)->Unit(benchmark::kMillisecond);

void BM_MinimizeJHalf(benchmark::State& state) {
  const BoundInputs in = BoundInputs::FromActions(100, 100);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        Minimize(Objective::JGamma(0.5), in).objective_value);
  }
}
BENCHMARK(BM_MinimizeJHalf)->Unit(benchmark::kMillisecond);

void BM_UnawareCoefficients(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(MinimizeUnawareCoefficients().kappa);
  }
}
BENCHMARK(BM_UnawareCoefficients)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ohedge

BENCHMARK_MAIN();
