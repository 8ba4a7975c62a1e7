#include <benchmark/benchmark.h>

#include "agdsim/analytics.hpp"

using namespace agdsim;

static void SurvivalQuadrature(benchmark::State& state) {
    const std::int64_t j = state.range(0);
    const std::int64_t k = state.range(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(residence_survival(j, k));
    }
}
BENCHMARK(SurvivalQuadrature)->Args({1, 10})->Args({5, 50})->Args({5, 1800});

static void SurvivalAlternating(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(residence_survival_alternating(5, 50));
    }
}
BENCHMARK(SurvivalAlternating);

static void ClassCountMean(benchmark::State& state) {
    const std::int64_t window = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(class_count_mean(window / 2, window));
    }
}
BENCHMARK(ClassCountMean)->Arg(10)->Arg(50)->Arg(200);

static void RecordMeanClosedForm(benchmark::State& state) {
    const std::int64_t window = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(record_mean(window));
    }
}
BENCHMARK(RecordMeanClosedForm)->Arg(100)->Arg(100000);

BENCHMARK_MAIN();
