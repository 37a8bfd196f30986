// Copyright 2026 The lozenge Authors
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

#include <vector>

#include "lozenge/cut_type.hpp"
#include "lozenge/group.hpp"
#include "lozenge/height.hpp"
#include "lozenge/lattice.hpp"
#include "lozenge/mutation.hpp"
#include "lozenge/oracle.hpp"
#include "lozenge/tiling.hpp"

namespace {

using namespace lozenge;

// A square-ish matrix of determinant n with a positive type.
PeriodicityMatrix cyclic(std::int64_t n) { return canonicalize({n, n - 1, 0, 1}); }

void BM_Canonicalize(benchmark::State& state) {
  std::int64_t k = 0;
  for (auto _ : state) {
    ++k;
    benchmark::DoNotOptimize(canonicalize({97 + k % 13, 12345 + k % 1000, -41, 7}));
  }
}
BENCHMARK(BM_Canonicalize);

void BM_KernelLattice(benchmark::State& state) {
  const std::vector<Relation> rel{{1, 1, 2}, {1, 4, 6}, {3, 5, 9}, {2, 7, 10}};
  for (auto _ : state) benchmark::DoNotOptimize(kernel_lattice(rel));
}
BENCHMARK(BM_KernelLattice);

void BM_ParseGroup(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_group("1/2(1,1,0); 1/6(1,4,1)"));
}
BENCHMARK(BM_ParseGroup);

void BM_ValidTypes(benchmark::State& state) {
  const PeriodicityMatrix b = cyclic(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(valid_types(b, true));
}
BENCHMARK(BM_ValidTypes)->RangeMultiplier(4)->Range(16, 1024);

void BM_CanonicalTiling(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const PeriodicityMatrix b = cyclic(n);
  const CutType g{1, 1, n - 2};
  for (auto _ : state) benchmark::DoNotOptimize(canonical_tiling(b, g));
  state.SetComplexityN(n);
}
BENCHMARK(BM_CanonicalTiling)->RangeMultiplier(4)->Range(16, 1 << 14)->Complexity();

void BM_HeightFunction(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const Tiling t = canonical_tiling(cyclic(n), {1, 1, n - 2});
  for (auto _ : state) benchmark::DoNotOptimize(HeightFunction(t));
  state.SetComplexityN(n);
}
BENCHMARK(BM_HeightFunction)->RangeMultiplier(4)->Range(16, 1 << 14)->Complexity();

void BM_EnumerateAll(benchmark::State& state) {
  const PeriodicityMatrix b = canonicalize({state.range(0), 0, 0, state.range(1)});
  std::size_t count = 0;
  for (auto _ : state) {
    count = enumerate_all_tilings(b, 16).size();
    benchmark::DoNotOptimize(count);
  }
  state.counters["tilings"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateAll)->Args({3, 3})->Args({4, 3})->Args({4, 4})->Args({6, 2})->Args({16, 1});

void BM_FlipClass(benchmark::State& state) {
  const PeriodicityMatrix b = canonicalize({6, 4, 0, 2});
  const Tiling t = canonical_tiling(b, {4, 4, 4});
  std::size_t size = 0;
  for (auto _ : state) {
    size = flip_class(t).size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["class"] = static_cast<double>(size);
}
BENCHMARK(BM_FlipClass);

void BM_FlipConnect(benchmark::State& state) {
  const PeriodicityMatrix b = canonicalize({4, 0, 0, 4});
  const auto cls = flip_class(canonical_tiling(b, {4, 4, 8}));
  const Tiling& from = cls.front();
  const Tiling& to = cls.back();
  for (auto _ : state) benchmark::DoNotOptimize(flip_connect(from, to));
}
BENCHMARK(BM_FlipConnect);

}  // namespace

BENCHMARK_MAIN();
