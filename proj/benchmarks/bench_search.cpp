#include <benchmark/benchmark.h>

#include "agdsim/graph.hpp"
#include "agdsim/model.hpp"
#include "agdsim/search.hpp"

using namespace agdsim;

static void AgdOracle(benchmark::State& state) {
    const ModelParams mp = derive_params(state.range(0), 1.0, 0.5, 1.0);
    std::uint64_t rep = 0;
    for (auto _ : state) {
        const std::uint64_t rs = replication_seed({11, rep++});
        const EdgeOracle oracle(mp, derive_stream_seed(rs, kEdgeStreamTag));
        CostStream costs(derive_stream_seed(rs, kCostStreamTag));
        const auto start = pick_start_vertex(derive_stream_seed(rs, kStartStreamTag), mp.n);
        benchmark::DoNotOptimize(run_agd(oracle, mp, costs, start));
    }
}
BENCHMARK(AgdOracle)->Arg(1000)->Arg(10000)->Arg(100000);

static void GdExplicit(benchmark::State& state) {
    const ModelParams mp = derive_params(state.range(0), 1.0, 0.5, 1.0);
    const ExplicitGraph g = sample_explicit(mp, 999);
    std::uint64_t rep = 0;
    for (auto _ : state) {
        const std::uint64_t rs = replication_seed({12, rep++});
        CostStream costs(derive_stream_seed(rs, kCostStreamTag));
        const auto start = pick_start_vertex(derive_stream_seed(rs, kStartStreamTag), mp.n);
        benchmark::DoNotOptimize(run_gd(g, mp, costs, start));
    }
}
BENCHMARK(GdExplicit)->Arg(1000)->Arg(10000);

static void SampleExplicitGraph(benchmark::State& state) {
    const ModelParams mp = derive_params(state.range(0), 1.0, 0.5, 1.0);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_explicit(mp, ++seed));
    }
}
BENCHMARK(SampleExplicitGraph)->Arg(200)->Arg(2000);

BENCHMARK_MAIN();
