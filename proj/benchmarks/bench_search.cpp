#include <benchmark/benchmark.h>

#include "oatk/search.hpp"

using namespace oatk;

static void BM_ExhaustSmall(benchmark::State& state) {
    // no simple OA(4,4,2,2) exists; measures full exhaustion
    for (auto _ : state) {
        auto out = exists_oa(4, 4, 2, 2, true);
        benchmark::DoNotOptimize(out.exhausted);
    }
}
BENCHMARK(BM_ExhaustSmall);

static void BM_FindEvenWeight16(benchmark::State& state) {
    SearchLimits limits;
    limits.workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto out = exists_oa(16, 5, 2, 4, true, limits);
        benchmark::DoNotOptimize(out.found);
    }
}
BENCHMARK(BM_FindEvenWeight16)->Arg(1)->Arg(4);

static void BM_MinRows523(benchmark::State& state) {
    for (auto _ : state) {
        auto r = min_rows(5, 2, 3, true, 32);
        benchmark::DoNotOptimize(r.min_n);
    }
}
BENCHMARK(BM_MinRows523);
