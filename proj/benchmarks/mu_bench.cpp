//  Copyright 2026 The mulat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <benchmark/benchmark.h>

#include "mulat/builders.hpp"
#include "mulat/corpus.hpp"
#include "mulat/enumerate.hpp"
#include "mulat/mu.hpp"
#include "mulat/suite.hpp"

namespace {

using namespace mulat;

// Brute-force μ over every ideal of Z_n.
void BM_ZnBruteForce(benchmark::State& state) {
  const auto z = zn_ideals(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state)
    for (Elem x = 0; x < z.size(); ++x) benchmark::DoNotOptimize(is_mu(z.lattice(), x));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(z.size()));
}
BENCHMARK(BM_ZnBruteForce)->Arg(360)->Arg(1680)->Arg(2000);

void BM_ZnFastPath(benchmark::State& state) {
  const auto z = zn_ideals(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state)
    for (Elem x = 0; x < z.size(); ++x)
      benchmark::DoNotOptimize(fast_mu_exponent(z.modulus(), z.exponents(x)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(z.size()));
}
BENCHMARK(BM_ZnFastPath)->Arg(360)->Arg(1680)->Arg(2000);

void BM_PowersetMu(benchmark::State& state) {
  const auto q = powerset_frame(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mu_elements(q.lattice()));
}
BENCHMARK(BM_PowersetMu)->DenseRange(3, 7);

void BM_MuClosed(benchmark::State& state) {
  const auto z = zn_ideals(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state)
    for (Elem x = 0; x < z.size(); ++x) benchmark::DoNotOptimize(is_mu_closed(z.lattice(), x));
}
BENCHMARK(BM_MuClosed)->Arg(360)->Arg(900);

void BM_AnalyzeAll(benchmark::State& state) {
  const auto z = zn_ideals(720720);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(analyze_all(z.lattice(), threads));
}
BENCHMARK(BM_AnalyzeAll)->Arg(1)->Arg(4)->UseRealTime();

void BM_Enumerate(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lattices(size, Dedupe::isomorphism));
}
BENCHMARK(BM_Enumerate)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_DefaultSuite(benchmark::State& state) {
  const auto corpus = default_corpus();
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(corpus, {}, threads));
}
BENCHMARK(BM_DefaultSuite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
