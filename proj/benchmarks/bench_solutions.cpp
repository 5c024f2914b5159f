#include <benchmark/benchmark.h>

#include "tourney/paper36.hpp"
#include "tourney/search.hpp"
#include "tourney/solutions.hpp"
#include "tourney/verify.hpp"

namespace {

using namespace tourney;

const Tournament& t36() {
  static const Tournament t = paper36::build_t36();
  return t;
}

void BM_BuildT36(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(paper36::build_t36());
}
BENCHMARK(BM_BuildT36);

void BM_BanksSetT36(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(banks_set(t36()));
}
BENCHMARK(BM_BanksSetT36)->Unit(benchmark::kMillisecond);

void BM_BipartisanT36(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bipartisan_set(t36()));
}
BENCHMARK(BM_BipartisanT36)->Unit(benchmark::kMillisecond);

void BM_VerifyTheorem(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(paper36::verify_theorem(t36()));
}
BENCHMARK(BM_VerifyTheorem)->Unit(benchmark::kMillisecond);

void BM_BanksRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(banks_set(random_tournament(n, ++seed)));
}
BENCHMARK(BM_BanksRandom)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_BipartisanRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bipartisan_set(random_tournament(n, ++seed)));
}
BENCHMARK(BM_BipartisanRandom)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(random_tournament(n, ++seed)));
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(8)->Arg(9)->Unit(benchmark::kMicrosecond);

void BM_ExhaustiveScan(benchmark::State& state) {
  ScanConfig cfg;
  cfg.max_order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_separation(cfg));
}
BENCHMARK(BM_ExhaustiveScan)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
