#include <benchmark/benchmark.h>

#include "hurwitz/factorization_count.hpp"
#include "hurwitz/partitions.hpp"

using namespace hurwitz;

namespace {

// Distinct queries so the per-query memo never serves a benchmark round.
std::vector<FactorizationQuery> query_pool(int dmax) {
    std::vector<FactorizationQuery> pool;
    for (int d = 2; d <= dmax; ++d) {
        for (const Multiset& plus : partitions_of(d, 2)) {
            for (const Multiset& minus : partitions_of(d, 2)) {
                if (plus.size() + minus.size() > 4) continue;
                std::vector<int> entries = plus;
                for (int w : minus) entries.push_back(-w);
                for (int g = 0; g <= 2; ++g) {
                    if (2 * g - 2 + static_cast<int>(entries.size()) < 0) continue;
                    for (bool conn : {true, false})
                        for (Variant v : {Variant::monotone(), Variant::strict(), Variant::plain()})
                            pool.push_back({g, entries, v, conn});
                }
            }
        }
    }
    return pool;
}

}  // namespace

static void BM_OracleSearch(benchmark::State& state) {
    static const std::vector<FactorizationQuery> pool = query_pool(static_cast<int>(state.range(0)));
    size_t i = 0;
    for (auto _ : state) {
        if (i >= pool.size()) {
            state.SkipWithError("query pool exhausted; lower the iteration count");
            break;
        }
        benchmark::DoNotOptimize(count_factorizations(pool[i++]));
    }
}
BENCHMARK(BM_OracleSearch)->Arg(4)->Iterations(100)->Unit(benchmark::kMillisecond);
