#include <benchmark/benchmark.h>

#include <random>

#include "cubeslice/constructions.hpp"
#include "cubeslice/cube.hpp"
#include "cubeslice/knapsack.hpp"
#include "cubeslice/pattern.hpp"
#include "cubeslice/tables.hpp"

using namespace cubeslice;

namespace {

RatMatrix random_integer_matrix(std::mt19937_64& rng, int rows, int cols) {
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = rat(static_cast<long>(rng() % 19) - 9);
  return m;
}

RatMatrix random_rational_matrix(std::mt19937_64& rng, int rows, int cols) {
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = rat(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 4));
  return m;
}

void BM_CountIntegerFastPath(benchmark::State& state) {
  std::mt19937_64 rng(1);
  auto map = AffineMap::linear(random_integer_matrix(rng, 8, static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_intersection(map, false, 1, CountStrategy::Integer));
}
BENCHMARK(BM_CountIntegerFastPath)->Arg(12)->Arg(16)->Arg(20);

void BM_CountRationalPath(benchmark::State& state) {
  std::mt19937_64 rng(2);
  auto map = AffineMap::linear(random_rational_matrix(rng, 4, static_cast<int>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_intersection(map, false, 1, CountStrategy::Rational));
}
BENCHMARK(BM_CountRationalPath)->Arg(10)->Arg(12)->Arg(14);

void BM_CountThreaded(benchmark::State& state) {
  std::mt19937_64 rng(3);
  auto map = AffineMap::linear(random_integer_matrix(rng, 8, 22));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        count_intersection(map, false, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CountThreaded)->Arg(1)->Arg(2)->Arg(4);

void BM_Realizable(benchmark::State& state) {
  // a mid-size k = 5 pattern exercised repeatedly by the exhaustive search
  auto c = build(TwoPowers{5, 3, 1});
  Pattern p = trace_pattern(c.map.L);
  for (auto _ : state) benchmark::DoNotOptimize(realizable(p));
}
BENCHMARK(BM_Realizable);

void BM_AchievableTableK4(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(achievable_table(4, MapClass::General));
}
BENCHMARK(BM_AchievableTableK4)->Unit(benchmark::kMillisecond);

void BM_Knapsack(benchmark::State& state) {
  std::mt19937_64 rng(4);
  KnapsackInstance inst;
  for (int i = 0; i < state.range(0); ++i)
    inst.weights.push_back(rat(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3)));
  inst.target = 1;
  for (auto _ : state) benchmark::DoNotOptimize(count_knapsack(inst));
}
BENCHMARK(BM_Knapsack)->Arg(20)->Arg(30);

void BM_GapCheck(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(check_gap_property(6, MapClass::General, 100, 9));
}
BENCHMARK(BM_GapCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
