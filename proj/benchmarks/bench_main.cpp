#include <benchmark/benchmark.h>

#include "ywalls/abacus.hpp"
#include "ywalls/series.hpp"
#include "ywalls/young_wall.hpp"

namespace {

using namespace ywalls;

void BM_EnumerateWalls(benchmark::State& state) {
  const RankD rank(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Int count = 0;
    for_each_wall(rank, state.range(1), [&](const YoungWallD&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateWalls)->Args({4, 12})->Args({4, 16})->Args({5, 14});

void BM_BruteForceEuler(benchmark::State& state) {
  const RankD rank(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_euler(rank, state.range(1)));
}
BENCHMARK(BM_BruteForceEuler)->Args({4, 12})->Args({5, 10})->Unit(benchmark::kMillisecond);

void BM_ClosedFormEuler(benchmark::State& state) {
  const RankD rank(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_euler(rank, state.range(1)));
}
BENCHMARK(BM_ClosedFormEuler)->Args({4, 12})->Args({5, 10})->Args({6, 12})->Unit(benchmark::kMillisecond);

void BM_ThetaSum(benchmark::State& state) {
  const RankD rank(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(theta_sum(rank, state.range(1)));
}
BENCHMARK(BM_ThetaSum)->Args({4, 12})->Args({6, 12})->Unit(benchmark::kMillisecond);

void BM_SeriesMultiply(benchmark::State& state) {
  const RankD rank(4);
  const auto eta = eta_factor(rank, state.range(0));
  const auto theta = theta_sum(rank, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eta * theta);
}
BENCHMARK(BM_SeriesMultiply)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_ComputeCore(benchmark::State& state) {
  std::vector<AbacusConfig> abaci;
  for_each_wall(RankD(4), state.range(0), [&](const YoungWallD& w) { abaci.push_back(wall_to_abacus(w)); });
  for (auto _ : state)
    for (const auto& a : abaci) benchmark::DoNotOptimize(compute_core(a));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(abaci.size()));
}
BENCHMARK(BM_ComputeCore)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
