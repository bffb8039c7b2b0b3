// Copyright 2026 The pauliprobe Authors
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

#include <vector>

#include "pauliprobe/channel.hpp"
#include "pauliprobe/covering.hpp"
#include "pauliprobe/probe.hpp"
#include "pauliprobe/syndrome.hpp"
#include "pauliprobe/uniform_family.hpp"
#include "pauliprobe/walsh_hadamard.hpp"

namespace pp = pauliprobe;

static void BM_WalshHadamard(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ch = pp::random_channel(n, 1);
  const auto rates = ch.error_rates().values();
  std::vector<double> buf(rates.begin(), rates.end());
  for (auto _ : state) {
    pp::walsh_hadamard_in_place(buf, pp::TransformDirection::kForward);
    benchmark::DoNotOptimize(buf.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(buf.size()));
}
BENCHMARK(BM_WalshHadamard)->DenseRange(2, 10, 2);

static void BM_SampleOutcomes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ch = pp::random_channel(n, 2);
  const pp::Probe probe = pp::AlphaProbe{n, 0.5};
  const std::uint64_t shots = 100000;
  for (auto _ : state) {
    auto rec = pp::sample_outcomes(ch, probe, shots, 3);
    benchmark::DoNotOptimize(rec.outcomes.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(shots));
}
BENCHMARK(BM_SampleOutcomes)->Arg(3)->Arg(6)->Arg(8);

static void BM_EstimateAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ch = pp::random_channel(n, 4);
  const auto rec = pp::sample_outcomes(ch, pp::AlphaProbe{n, 0.5}, 100000, 5);
  for (auto _ : state) {
    auto est = pp::estimate_all(rec);
    benchmark::DoNotOptimize(est.values().data());
  }
}
BENCHMARK(BM_EstimateAll)->Arg(3)->Arg(6)->Arg(8);

static void BM_SyndromeDistribution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ch = pp::random_channel(n, 6);
  const auto g = pp::UniformFamily(n, 0, 1).member(0);
  for (auto _ : state) {
    auto pr = pp::syndrome_distribution(g, ch);
    benchmark::DoNotOptimize(pr.data());
  }
}
BENCHMARK(BM_SyndromeDistribution)->Arg(4)->Arg(8);

static void BM_GreedyCover(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int w = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto res = pp::greedy_cover(n, 0, w);
    benchmark::DoNotOptimize(res.covering.groups.data());
  }
}
BENCHMARK(BM_GreedyCover)->Args({4, 2})->Args({6, 2})->Args({6, 3})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
