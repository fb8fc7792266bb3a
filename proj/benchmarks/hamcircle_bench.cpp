// Copyright 2026 The hamcircle Authors
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

#include <random>

#include "hamcircle/catalog.hpp"
#include "hamcircle/cayley.hpp"
#include "hamcircle/counterexample.hpp"
#include "hamcircle/hamilton.hpp"
#include "hamcircle/verify.hpp"

namespace {

using namespace hamcircle;

void BM_BrittonNormalForm(benchmark::State& state) {
  const GroupSpec g = catalog::CounterexampleAmalgam();
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, g.generators.size() - 1);
  std::vector<std::string> word;
  for (int i = 0; i < state.range(0); ++i) word.push_back(g.generators[pick(rng)].name);
  for (auto _ : state) benchmark::DoNotOptimize(BrittonNormalForm(g, word));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BrittonNormalForm)->Arg(16)->Arg(256);

void BM_BuildBall(benchmark::State& state) {
  const GroupSpec g = catalog::CounterexampleAmalgam();
  for (auto _ : state) benchmark::DoNotOptimize(BuildBall(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildBall)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FiniteCycle(benchmark::State& state) {
  const FiniteGroupTable q8 = catalog::Quaternion();
  for (auto _ : state) benchmark::DoNotOptimize(FiniteHamiltonCycle(q8));
}
BENCHMARK(BM_FiniteCycle);

void BM_VerifyZigZag(benchmark::State& state) {
  const GroupSpec g = catalog::ZigZagAmalgam();
  const CircleCertificate cert = ZigZagCircle(g, FiniteHamiltonCycle(g.amalgam().left));
  for (auto _ : state) {
    benchmark::DoNotOptimize(VerifyCertificate(cert, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_VerifyZigZag)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_ObstructionSearch(benchmark::State& state) {
  const CayleyBall ball = BuildBall(BuildCounterexampleSpec(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ObstructionSearch(ball, 6));
}
BENCHMARK(BM_ObstructionSearch)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
