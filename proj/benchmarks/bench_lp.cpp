#include <benchmark/benchmark.h>

#include "oatk/lp.hpp"

using namespace oatk;

static void BM_LPBound(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    int t = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto cert = lp_bound(k, t);
        benchmark::DoNotOptimize(cert.optimum);
    }
}
BENCHMARK(BM_LPBound)->Args({8, 4})->Args({12, 6})->Args({13, 6})->Args({16, 8});

static void BM_VerifyCertificate(benchmark::State& state) {
    auto cert = lp_bound(13, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_certificate(cert).ok);
    }
}
BENCHMARK(BM_VerifyCertificate);
