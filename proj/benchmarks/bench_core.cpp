#include <benchmark/benchmark.h>

#include "nonarch/pole_orders.hpp"
#include "nonarch/series.hpp"
#include "nonarch/skeleton.hpp"
#include "nonarch/tate.hpp"

using namespace nonarch;

static void BM_BinomFractional(benchmark::State& state) {
  const auto k = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(binom_fractional(mpq_class(1, 3), k, 3));
}
BENCHMARK(BM_BinomFractional)->Arg(16)->Arg(64)->Arg(256);

static void BM_PPowerRoot(benchmark::State& state) {
  const long n = state.range(0);
  std::vector<PadicNumber> c(static_cast<std::size_t>(n) + 1, PadicNumber::exact(3, 0));
  c[0] = PadicNumber::exact(3, 1);
  c[static_cast<std::size_t>(n)] = PadicNumber::exact(3, 3);
  const BoundedSeries f(3, c);
  for (auto _ : state) benchmark::DoNotOptimize(series_p_power_root(f, 1));
}
BENCHMARK(BM_PPowerRoot)->Arg(2)->Arg(8)->Arg(32);

static void BM_OrderSet(benchmark::State& state) {
  PoleFamily fam;
  fam.p = 3;
  fam.x = PadicNumber::exact(3, 0);
  for (long i = 1; i <= state.range(0); ++i) fam.poles.push_back(PadicNumber::exact(3, i * 3 + 1));
  for (auto _ : state) benchmark::DoNotOptimize(order_set(fam, 2 * state.range(0)));
}
BENCHMARK(BM_OrderSet)->Arg(4)->Arg(8)->Arg(16);

static void BM_DeltaAtOne(benchmark::State& state) {
  const PadicNumber q = PadicNumber::exact(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(delta_at_one(6, q, state.range(0)));
}
BENCHMARK(BM_DeltaAtOne)->Arg(10)->Arg(40);

static void BM_ComposeCheck(benchmark::State& state) {
  const Tower t = random_tower(7, 3);
  std::mt19937_64 rng(7);
  const auto samples = random_points(t.graphs[2], rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compose_check(t.steps[1], t.steps[0], samples));
}
BENCHMARK(BM_ComposeCheck)->Arg(100)->Arg(1000);
BENCHMARK_MAIN();
