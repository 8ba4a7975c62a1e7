#include <benchmark/benchmark.h>

#include "agdsim/model.hpp"
#include "agdsim/poisson.hpp"
#include "agdsim/record.hpp"

using namespace agdsim;

static void RecordDirect(benchmark::State& state) {
    const std::int64_t window = state.range(0);
    std::uint64_t rep = 0;
    for (auto _ : state) {
        CostStream stream(replication_seed({1, rep++}));
        benchmark::DoNotOptimize(run_record_direct(window, stream));
    }
}
BENCHMARK(RecordDirect)->Arg(10)->Arg(100)->Arg(1000);

static void RecordJump(benchmark::State& state) {
    const std::int64_t window = state.range(0);
    std::uint64_t rep = 0;
    for (auto _ : state) {
        CostStream stream(replication_seed({2, rep++}));
        benchmark::DoNotOptimize(run_record_jump(window, stream));
    }
}
BENCHMARK(RecordJump)->Arg(10)->Arg(1000)->Arg(100000);

static void PoissonRepresentation(benchmark::State& state) {
    const std::int64_t window = state.range(0);
    std::uint64_t rep = 0;
    for (auto _ : state) {
        CostStream stream(replication_seed({3, rep++}));
        benchmark::DoNotOptimize(run_poisson_representation(window, stream));
    }
}
BENCHMARK(PoissonRepresentation)->Arg(10)->Arg(1000)->Arg(100000);

BENCHMARK_MAIN();
