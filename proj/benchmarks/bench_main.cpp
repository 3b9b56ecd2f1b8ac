// Copyright 2026 The embising Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "embising/cuts.hpp"
#include "embising/ising.hpp"
#include "embising/lp.hpp"
#include "embising/oracle.hpp"
#include "embising/random.hpp"
#include "embising/subproblem.hpp"

namespace {

using namespace embising;

SubproblemInstance tree_instance(std::size_t n) {
  Rng rng(n);
  return random_instance(random_tree(n, rng), rng, 0.5);
}

void BM_TreeWeightLp(benchmark::State& state) {
  const auto inst = tree_instance(static_cast<std::size_t>(state.range(0)));
  const auto family = tree_edge_cuts(inst.graph);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_weight_distribution(inst, family).theta);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TreeWeightLp)->RangeMultiplier(4)->Range(8, 2048)->Complexity()
    ->Unit(benchmark::kMillisecond);

void BM_ConnectedWeightLp(benchmark::State& state) {
  Rng rng(7);
  const auto inst = random_instance(
      random_connected_graph(static_cast<std::size_t>(state.range(0)), 0.3, rng), rng, 0.5);
  const auto family = connected_cuts(inst.graph);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_weight_distribution(inst, family).theta);
  }
  state.counters["cuts"] = static_cast<double>(family.size());
}
BENCHMARK(BM_ConnectedWeightLp)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
  Rng rng(11);
  const auto model = random_model(
      random_connected_graph(static_cast<std::size_t>(state.range(0)), 0.3, rng), rng);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_minimum(model).value);
}
BENCHMARK(BM_BruteForce)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_Sufficiency(benchmark::State& state) {
  const auto inst = tree_instance(static_cast<std::size_t>(state.range(0)));
  const auto solution = solve_weight_distribution(inst, tree_edge_cuts(inst.graph));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verify_sufficiency(inst, solution.theta, solution.omega, 2.0 * inst.gamma).pass);
  }
}
BENCHMARK(BM_Sufficiency)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
