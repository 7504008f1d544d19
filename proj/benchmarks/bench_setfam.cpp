#include <benchmark/benchmark.h>

#include <random>

#include "setfam/ep.hpp"
#include "setfam/family.hpp"
#include "setfam/multifamily.hpp"
#include "setfam/packed.hpp"
#include "setfam/topology.hpp"
#include "setfam/verify.hpp"

using namespace setfam;

static void OutCoreDP(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Universe u = default_universe(n);
  std::mt19937_64 rng(1);
  std::vector<MultiFamily> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(sample_increasing_multifamily(u, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(out_core(inputs[i++ & 63]));
  }
}
BENCHMARK(OutCoreDP)->DenseRange(2, 4);

static void InnHullDP(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Universe u = default_universe(n);
  std::mt19937_64 rng(2);
  std::vector<MultiFamily> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(sample_increasing_multifamily(u, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(inn_hull(inputs[i++ & 63]));
  }
}
BENCHMARK(InnHullDP)->DenseRange(2, 4);

static void PackedAsoSweep(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t total = packed::all_families_mask(n);
    std::uint64_t acc = 0;
    for (std::uint64_t f = 0;; ++f) {
      acc ^= packed::aso(f, n);
      if (f == total) break;
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(PackedAsoSweep)->DenseRange(3, 4);

static void PropFltAllSelfAso(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    int count = 0;
    enumerate_families(n, SpeciesFilter::self_aso_eventual, [&](const Family& f) {
      if (prop_flt_report(f).all_equal()) ++count;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(PropFltAllSelfAso)->DenseRange(3, 4);

static void CogapCanonical(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<EpSet> inputs;
  for (int i = 0; i < 256; ++i) inputs.push_back(sample_epset(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cogap(inputs[i++ & 255]));
  }
}
BENCHMARK(CogapCanonical);

static void CensusN3(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(census(3));
  }
}
BENCHMARK(CensusN3);

static void LimitSetsAllTopologies(benchmark::State& state) {
  Universe u = default_universe(3);
  auto topologies = enumerate_topologies(u);
  auto families = enumerate_families_vec(3, SpeciesFilter::eventual);
  for (auto _ : state) {
    std::uint32_t acc = 0;
    for (const auto& t : topologies)
      for (const auto& f : families) acc ^= limit_set(f, t).bits;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(LimitSetsAllTopologies);

BENCHMARK_MAIN();
