// Copyright 2026 The haar-forge Authors
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

#include "haarforge/matrix.hpp"
#include "haarforge/samplers.hpp"
#include "haarforge/spectra.hpp"

namespace {

using haarforge::Group;
using haarforge::Method;

template <Group G, Method M>
void BM_Sample(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  haarforge::RandomStream s(1);
  for (auto _ : state) benchmark::DoNotOptimize(haarforge::sample_group(s, {G, n}, M));
  state.SetItemsProcessed(state.iterations());
}

void BM_Permutation(benchmark::State& state) {
  haarforge::RandomStream s(1);
  for (auto _ : state) benchmark::DoNotOptimize(haarforge::sample_permutation(s, static_cast<std::size_t>(state.range(0))));
}

void BM_Eigenphases(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  haarforge::RandomStream s(1);
  const auto x = haarforge::haar_u_euler(s, n);
  for (auto _ : state) benchmark::DoNotOptimize(haarforge::eigenphases(x));
}

void BM_Cmv(benchmark::State& state) {
  haarforge::RandomStream s(1);
  for (auto _ : state) benchmark::DoNotOptimize(haarforge::cmv_matrix(s, static_cast<std::size_t>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_Sample<Group::so, Method::euler>)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_Sample<Group::so, Method::qr>)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_Sample<Group::so, Method::householder>)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_Sample<Group::u, Method::euler>)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_Sample<Group::u, Method::householder>)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_Sample<Group::sp, Method::euler>)->RangeMultiplier(2)->Range(2, 32);
BENCHMARK(BM_Permutation)->RangeMultiplier(4)->Range(4, 256);
BENCHMARK(BM_Eigenphases)->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(BM_Cmv)->RangeMultiplier(2)->Range(4, 64);

BENCHMARK_MAIN();
