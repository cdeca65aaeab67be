/* Copyright 2026 The resforge Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <benchmark/benchmark.h>

#include "resforge/extension.hpp"
#include "resforge/lattice.hpp"
#include "resforge/sampling.hpp"
#include "resforge/symbols.hpp"
#include "resforge/torsor.hpp"

namespace {

using namespace resforge;

std::shared_ptr<const RingCtx> ring_of(std::uint32_t p, std::uint32_t f = 1) {
  return RingCtx::make(FieldCtx::make(p, f));
}

void BM_DirectSymbol(benchmark::State& state) {
  auto ring = ring_of(13);
  Sampler s(1);
  const KElem a = s.element(ring, -2, 2), b = s.element(ring, -2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(power_residue_symbol(a, b, 12));
}
BENCHMARK(BM_DirectSymbol);

void BM_MusetSymbol(benchmark::State& state) {
  auto ring = ring_of(static_cast<std::uint32_t>(state.range(0)));
  Sampler s(2);
  const KElem a = s.element(ring, -2, 2), b = s.element(ring, -2, 2);
  const auto n = static_cast<std::uint32_t>(state.range(0) - 1);
  for (auto _ : state) benchmark::DoNotOptimize(muset_symbol(a, b, n));
}
BENCHMARK(BM_MusetSymbol)->Arg(7)->Arg(13)->Arg(31);

// Exact-sequence scalars are memoized per thread, so this measures the
// steady state of a sweep.
void BM_CorrectedSymbol(benchmark::State& state) {
  auto ring = ring_of(static_cast<std::uint32_t>(state.range(0)));
  const ExtCtx ctx(ring, static_cast<std::uint32_t>(state.range(0) - 1));
  Sampler s(3);
  const KElem a = s.element(ring, -2, 2), b = s.element(ring, -2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(corrected_symbol(ctx, a, b));
}
BENCHMARK(BM_CorrectedSymbol)->Arg(7)->Arg(13);

void BM_ModuleDeterminant(benchmark::State& state) {
  auto ring = ring_of(7);
  const FiniteModule t(ring, {1, static_cast<int>(state.range(0))});
  Sampler s(4);
  const ModuleMap g = s.module_aut(t);
  const auto method = state.range(1) == 0 ? DetMethod::kFast : DetMethod::kBrute;
  for (auto _ : state) benchmark::DoNotOptimize(det_of_module_aut(g, 6, method));
}
BENCHMARK(BM_ModuleDeterminant)
    ->ArgNames({"e", "brute"})
    ->Args({1, 0})
    ->Args({1, 1})
    ->Args({2, 0})
    ->Args({2, 1})
    ->Args({3, 0})
    ->Args({3, 1});

void BM_Cocycle(benchmark::State& state) {
  auto ring = ring_of(5);
  const ExtCtx ctx(ring, 4);
  Sampler s(5);
  const auto m = static_cast<std::size_t>(state.range(0));
  const KMatrix f = s.gl(ring, m, -1, 1), g = s.gl(ring, m, -1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(cocycle(ctx, f, g));
}
BENCHMARK(BM_Cocycle)->Arg(1)->Arg(2);

void BM_LatticeIntersect(benchmark::State& state) {
  auto ring = ring_of(7);
  const auto m = static_cast<std::size_t>(state.range(0));
  Sampler s(6);
  const Lattice a = Lattice::span(s.gl(ring, m, -2, 2));
  const Lattice b = Lattice::span(s.gl(ring, m, -2, 2));
  for (auto _ : state) benchmark::DoNotOptimize(lat_intersect(a, b));
}
BENCHMARK(BM_LatticeIntersect)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
