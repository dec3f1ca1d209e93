#include <benchmark/benchmark.h>

#include "oatk/boolfun.hpp"
#include "oatk/character.hpp"
#include "oatk/constructions.hpp"
#include "oatk/strength.hpp"

using namespace oatk;

static void BM_VerifyStrengthNR(benchmark::State& state) {
    SymbolArray nr = nordstrom_robinson();
    for (auto _ : state) {
        auto rep = verify_strength(nr, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(rep.holds);
    }
}
BENCHMARK(BM_VerifyStrengthNR)->Arg(4)->Arg(5)->Arg(6);

static void BM_CharacterSumNR(benchmark::State& state) {
    SymbolArray nr = nordstrom_robinson();
    for (auto _ : state) {
        auto res = character_sum_check(nr, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(res.holds);
    }
}
BENCHMARK(BM_CharacterSumNR)->Arg(4)->Arg(5);

static void BM_GramCheck(benchmark::State& state) {
    SymbolArray nr = nordstrom_robinson();
    auto h = build_character_matrix(nr, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gram_is_scaled_identity(h));
    }
}
BENCHMARK(BM_GramCheck);

static void BM_FourierSpectrum(benchmark::State& state) {
    BooleanFunction f = oa_to_support(nordstrom_robinson());
    for (auto _ : state) {
        auto spec = fourier_spectrum(f);
        benchmark::DoNotOptimize(spec.data());
    }
}
BENCHMARK(BM_FourierSpectrum);

static void BM_DualCodeEnumeration(benchmark::State& state) {
    LinearCode code = linear_13_3_7_code();
    for (auto _ : state) {
        SymbolArray dual = dual_code_oa(code);
        benchmark::DoNotOptimize(dual.rows());
    }
}
BENCHMARK(BM_DualCodeEnumeration);
