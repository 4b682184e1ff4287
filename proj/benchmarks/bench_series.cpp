#include <benchmark/benchmark.h>

#include "hurwitz/series.hpp"

using namespace hurwitz;

static void BM_SeriesInverse(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    LaurentSeries s = s_series(order);
    for (auto _ : state) {
        LaurentSeries inv = s.inverse();
        benchmark::DoNotOptimize(inv);
    }
}
BENCHMARK(BM_SeriesInverse)->Arg(8)->Arg(16)->Arg(32);

static void BM_SeriesProduct(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    LaurentSeries s = s_series(order);
    LaurentSeries t = s.scaled(3);
    for (auto _ : state) {
        LaurentSeries p = s * t;
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_SeriesProduct)->Arg(8)->Arg(16)->Arg(32);

static void BM_OnePointCoefficients(benchmark::State& state) {
    for (auto _ : state) {
        // rebuild from scratch each round: inversion dominates
        LaurentSeries inv = zeta_series(2 * static_cast<int>(state.range(0)) + 1).inverse();
        benchmark::DoNotOptimize(inv);
    }
}
BENCHMARK(BM_OnePointCoefficients)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
