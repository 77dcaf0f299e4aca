#include <benchmark/benchmark.h>

#include <random>

#include "fxp/conformance/fuzz.hpp"
#include "fxp/ops.hpp"

using namespace fxp;

static void BM_RoundTo(benchmark::State& state) {
    ExactValue x(BigInt(1311 * 7 + 3), BigInt(1) << 20);
    for (auto _ : state) {
        auto v = round_to(x, formats::s16_15, RoundingMode::NearestEven,
                          OverflowPolicy::Saturate);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_RoundTo);

static void BM_MixedMul(benchmark::State& state) {
    FixedValue a(formats::u0_32, 0xDEADBEEF);
    FixedValue b(formats::s16_15, 0x12345678);
    for (auto _ : state) {
        auto v = mul(a, b, formats::u0_32, RoundingMode::NearestEven,
                     OverflowPolicy::Saturate);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_MixedMul);

static void BM_EmulatedMul(benchmark::State& state) {
    FixedValue a(formats::u0_32, 0xDEADBEEF);
    FixedValue b(formats::s16_15, 0x12345678);
    for (auto _ : state) {
        auto v = emulated_mul(a, b, formats::u0_32);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_EmulatedMul);

static void BM_ParseDecimal(benchmark::State& state) {
    for (auto _ : state) {
        auto v = parse_decimal("0.040008544921875", formats::s0_31,
                               RoundingMode::NearestEven, OverflowPolicy::Saturate);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_ParseDecimal);

static void BM_Fuzz1k(benchmark::State& state) {
    FuzzConfig cfg;
    cfg.count = 1000;
    cfg.formats = {formats::s16_15, formats::u0_32};
    for (auto _ : state) {
        cfg.seed = static_cast<std::uint64_t>(state.iterations());
        auto rep = fuzz(cfg);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_Fuzz1k)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
