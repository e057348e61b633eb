#include <benchmark/benchmark.h>

#include <random>

#include "sds/clique.hpp"
#include "sds/coding.hpp"
#include "sds/construction.hpp"
#include "sds/phase_space.hpp"
#include "sds/word_graphs.hpp"

namespace {

sds::SdsDefinition random_complete(std::size_t n) {
  std::mt19937_64 rng(n);
  sds::VertexFunction f(n);
  for (std::uint64_t k = 0; k < f.table_size(); ++k) f.set(k, rng() & 1U);
  return sds::SdsDefinition::complete(n, f);
}

void BM_PhaseSpace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = random_complete(n);
  sds::PhaseSpaceOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sds::phase_space(s, opts).census);
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_PhaseSpace)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_TwoCycleCountFastPath(benchmark::State& state) {
  const auto s = random_complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sds::two_cycle_count(s));
}
BENCHMARK(BM_TwoCycleCountFastPath)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_BruteForceEta(benchmark::State& state) {
  sds::EtaOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sds::brute_force_eta(static_cast<std::size_t>(state.range(0)), opts).eta);
}
BENCHMARK(BM_BruteForceEta)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Materialize(benchmark::State& state) {
  const sds::ImplicitGraphSpec spec{sds::GraphKind::j, static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(sds::materialize(spec).edge_count());
}
BENCHMARK(BM_Materialize)->Arg(7)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_MaxCliqueJ(benchmark::State& state) {
  const auto g = sds::materialize({sds::GraphKind::j, static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(sds::max_clique(g).size);
}
BENCHMARK(BM_MaxCliqueJ)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_MaxCliqueHatH8(benchmark::State& state) {
  const auto g = sds::materialize({sds::GraphKind::hat_h, 8});
  for (auto _ : state) benchmark::DoNotOptimize(sds::max_clique(g).size);
}
BENCHMARK(BM_MaxCliqueHatH8)->Unit(benchmark::kMillisecond);

void BM_HammingMinDistance(benchmark::State& state) {
  const auto c = sds::hamming_code(4);
  for (auto _ : state) benchmark::DoNotOptimize(sds::min_distance(c));
}
BENCHMARK(BM_HammingMinDistance)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
