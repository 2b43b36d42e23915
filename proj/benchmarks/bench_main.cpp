// Copyright 2026 the segstab authors
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

#include <memory>

#include "segstab/constructions.hpp"
#include "segstab/cooperative.hpp"
#include "segstab/oracle.hpp"
#include "segstab/stability.hpp"

namespace {

using namespace segstab;

// A mildly awkward market: n values 1..n, masses 1/(i+2).
MarketPtr bench_market(std::size_t n) {
  std::vector<Rational> values, masses;
  for (std::size_t i = 0; i < n; ++i) {
    values.emplace_back(static_cast<long>(i + 1));
    masses.emplace_back(1, static_cast<long>(i + 3));
  }
  return std::make_shared<const Market>(std::move(values), std::move(masses));
}

void BM_MerSegmentation(benchmark::State& state) {
  const MarketPtr m = bench_market(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto result = mer_segmentation(*m);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_MerSegmentation)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_GreedyConstruction(benchmark::State& state) {
  const MarketPtr m = bench_market(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Segmentation s = greedy_stable_segmentation(*m);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_GreedyConstruction)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_StabilityCheck(benchmark::State& state) {
  const MarketPtr m = bench_market(static_cast<std::size_t>(state.range(0)));
  const Segmentation s = mer_segmentation(*m).first;
  for (auto _ : state) {
    bool stable = is_stable(s);
    benchmark::DoNotOptimize(stable);
  }
}
BENCHMARK(BM_StabilityCheck)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_NonsaturationWitness(benchmark::State& state) {
  // A 21-atom unsaturated fixture.
  auto m = std::make_shared<const Market>(
      std::vector<Rational>{Rational(1), Rational(2), Rational(3)},
      std::vector<Rational>{Rational(6, 21), Rational(4, 21), Rational(11, 21)});
  const Segmentation s({
      Segment(Coalition(m, {Rational(6, 21), Rational(0), Rational(3, 21)}), Rational(1)),
      Segment(Coalition(m, {Rational(0), Rational(4, 21), Rational(8, 21)}), Rational(2)),
  });
  for (auto _ : state) {
    Witness w = nonsaturation_witness(s);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_NonsaturationWitness);

void BM_OracleEnumeration(benchmark::State& state) {
  const std::size_t atoms = static_cast<std::size_t>(state.range(0));
  std::vector<Rational> pool;
  for (std::size_t t = 0; t < atoms; ++t)
    pool.emplace_back(static_cast<long>(t % 3 + 1));
  const AtomizedMarket am = AtomizedMarket::from_atoms(pool, Rational(1, 8));
  for (auto _ : state) {
    auto all = enumerate_segmentations(am, atoms);
    benchmark::DoNotOptimize(all);
  }
}
BENCHMARK(BM_OracleEnumeration)->Arg(5)->Arg(6)->Arg(7)->Arg(8);

void BM_WeakChainRoundTrip(benchmark::State& state) {
  const MarketPtr m = bench_market(static_cast<std::size_t>(state.range(0)));
  const Segmentation blocked = greedy_stable_segmentation(*m);
  const Segmentation blocker = mer_segmentation(*m).first;
  for (auto _ : state) {
    BlockingChain chain = build_rv_chain(blocked, blocker, ChainVariant::Weak);
    bool ok = check_chain(chain, ChainVariant::Weak);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_WeakChainRoundTrip)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
