#include <benchmark/benchmark.h>

#include "hurwitz/tropical.hpp"

using namespace hurwitz;

static void BM_EnumerateCovers(benchmark::State& state) {
    Profile x({4, 3, -5, -2});
    Composition lambda(static_cast<size_t>(state.range(0)), 1);
    for (auto _ : state) {
        long count = 0;
        enumerate_covers(x.positive_part(), x.negative_part(), lambda, true,
                         [&](const Cover&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateCovers)->Arg(2)->Arg(3)->Arg(4);

static void BM_GenusOneSlice(benchmark::State& state) {
    // distinct profiles per round: the slice memo never serves a repeat
    int a = 5;
    for (auto _ : state) {
        Profile x({a, 3, -4, -(a - 1)});
        Rational v = h_slice(1, x, {1, 1, 1, 1}, Variant::monotone(), true);
        benchmark::DoNotOptimize(v);
        ++a;
    }
}
BENCHMARK(BM_GenusOneSlice)->Iterations(40)->Unit(benchmark::kMillisecond);
