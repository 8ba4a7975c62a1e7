#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "agdsim/search.hpp"
#include "agdsim/stats.hpp"
#include "support/test_support.hpp"

using namespace agdsim;
using test::ScriptedSource;

TEST_CASE("two vertices, one edge: forced jump") {
    const ExplicitGraph g(2, {{0, 1}});
    const ModelParams mp = derive_params(2, 1.0, 0.5, 1.0);
    ScriptedSource costs({0.9, 0.1}, 0.99);
    SearchTrace trace;
    const SearchOutcome out = run_agd(g, mp, costs, 0, &trace);
    CHECK(out.visits == 2);
    CHECK(out.final_cost == 0.1);
    CHECK(out.final_vertex == 1);
    CHECK(out.explorations == 1);
    CHECK(out.steps == 2);
    CHECK(out.verified_local_min);
    CHECK(verify_local_min(g, VertexOverlay(trace.alive), out.final_vertex, trace.revealed));

    // with a single candidate per block the first-improvement rule agrees
    ScriptedSource costs2({0.9, 0.1}, 0.99);
    CHECK(test::same_outcome(out, run_baseline(g, mp, costs2, 0)));
}

TEST_CASE("empty graph: the start vertex is already a confirmed minimum") {
    const ExplicitGraph g(3, {});
    const ModelParams mp = derive_params(3, 1.0, 0.5, 1.0);
    ScriptedSource costs({0.42}, 0.5);
    const SearchOutcome out = run_agd(g, mp, costs, 1);
    CHECK(out.visits == 1);
    CHECK(out.explorations == 0);
    CHECK(out.final_cost == 0.42);
    CHECK(out.verified_local_min);
}

TEST_CASE("full descent on a star stops at the centre") {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t leaf = 1; leaf <= 5; ++leaf) edges.emplace_back(0, leaf);
    const ExplicitGraph star(6, std::move(edges));
    const ModelParams mp = derive_params(6, 1.0, 0.5, 1.0);
    ScriptedSource costs({0.5, 0.6, 0.7, 0.8, 0.9, 0.95});
    SearchTrace trace;
    const SearchOutcome out = run_gd(star, mp, costs, 0, &trace);
    CHECK(out.visits == 1);
    CHECK(out.steps == 1);
    CHECK(out.explorations == 5);
    CHECK(out.final_cost == 0.5);
    CHECK(verify_local_min(star, VertexOverlay(trace.alive), 0, trace.revealed));
}

TEST_CASE("full descent walks down a path") {
    const ExplicitGraph path(3, {{0, 1}, {1, 2}});
    const ModelParams mp = derive_params(3, 1.0, 0.5, 1.0);
    ScriptedSource costs({0.3, 0.2, 0.1});
    const SearchOutcome out = run_gd(path, mp, costs, 0);
    CHECK(out.final_vertex == 2);
    CHECK(out.final_cost == 0.1);
    CHECK(out.visits == 3);
    CHECK(out.explorations == 2);
}

TEST_CASE("cheapest vs first improvement pick different jump targets") {
    const ExplicitGraph g(3, {{0, 1}, {0, 2}});
    const ModelParams mp = derive_params(3, 1.0, 0.5, 5.0); // one block covers all
    REQUIRE(mp.block_size >= 3);

    ScriptedSource costs_a({0.5, 0.4, 0.2}, 0.99);
    SearchTrace trace_a;
    const SearchOutcome cheapest = run_agd(g, mp, costs_a, 0, &trace_a);
    CHECK(trace_a.visit_chain == std::vector<std::uint32_t>{0, 2});
    CHECK(cheapest.final_cost == 0.2);

    ScriptedSource costs_b({0.5, 0.4, 0.2}, 0.99);
    SearchTrace trace_b;
    const SearchOutcome first = run_baseline(g, mp, costs_b, 0, &trace_b);
    CHECK(trace_b.visit_chain == std::vector<std::uint32_t>{0, 1});
    CHECK(first.final_cost == 0.4);
}

TEST_CASE("one covering block reproduces the full descent exactly") {
    const ModelParams wide = derive_params(200, 1.0, 0.5, 20.0);
    REQUIRE(wide.block_size >= 200);
    for (std::uint64_t rep = 0; rep < 30; ++rep) {
        const std::uint64_t rs = replication_seed({808, rep});
        const ExplicitGraph g = sample_explicit(wide, derive_stream_seed(rs, kEdgeStreamTag));
        const auto start = pick_start_vertex(derive_stream_seed(rs, kStartStreamTag), wide.n);
        CostStream c1(derive_stream_seed(rs, kCostStreamTag));
        CostStream c2(derive_stream_seed(rs, kCostStreamTag));
        const SearchOutcome agd = run_agd(g, wide, c1, start);
        const SearchOutcome gd = run_gd(g, wide, c2, start);
        CHECK(agd.final_cost == gd.final_cost);
        CHECK(agd.final_vertex == gd.final_vertex);
        CHECK(agd.explorations == gd.explorations);
        CHECK(agd.visits == gd.visits);
        CHECK(agd.steps == gd.steps);
    }
}

TEST_CASE("run accounting invariants on random instances") {
    const ModelParams mp = derive_params(150, 1.0, 0.5, 1.0);
    for (std::uint64_t rep = 0; rep < 150; ++rep) {
        const std::uint64_t rs = replication_seed({909, rep});
        const std::uint64_t cost_seed = derive_stream_seed(rs, kCostStreamTag);
        const ExplicitGraph g = sample_explicit(mp, derive_stream_seed(rs, kEdgeStreamTag));
        const auto start = pick_start_vertex(derive_stream_seed(rs, kStartStreamTag), mp.n);
        CostStream costs(cost_seed);
        SearchTrace trace;
        const int algo = static_cast<int>(rep % 3);
        const SearchOutcome out = algo == 0   ? run_agd(g, mp, costs, start, &trace)
                                  : algo == 1 ? run_baseline(g, mp, costs, start, &trace)
                                              : run_gd(g, mp, costs, start, &trace);

        // visit costs strictly decrease along the chain
        CHECK(trace.visit_chain.size() == static_cast<std::size_t>(out.visits));
        for (std::size_t i = 1; i < trace.visit_chain.size(); ++i) {
            CHECK(trace.revealed[trace.visit_chain[i]] < trace.revealed[trace.visit_chain[i - 1]]);
        }
        CHECK(out.visits <= out.explorations + 1);

        // every revealed cost is a sequential stream value and the final
        // cost is the running minimum of all of them
        std::vector<double> revealed;
        for (double c : trace.revealed) {
            if (!std::isnan(c)) revealed.push_back(c);
        }
        CHECK(revealed.size() == static_cast<std::size_t>(out.explorations) + 1);
        std::vector<double> stream_prefix;
        for (std::uint64_t k = 0; k < revealed.size(); ++k) {
            stream_prefix.push_back(CostStream::value_at(cost_seed, k));
        }
        if (algo != 1) {
            // cheapest-improvement walks sit at the running minimum of
            // everything revealed; first-improvement deliberately may not
            CHECK(out.final_cost ==
                  *std::min_element(stream_prefix.begin(), stream_prefix.end()));
        }
        std::sort(revealed.begin(), revealed.end());
        std::sort(stream_prefix.begin(), stream_prefix.end());
        CHECK(revealed == stream_prefix);

        // terminal vertex is verifiable against the final overlay
        VertexOverlay overlay(trace.alive);
        CHECK(verify_local_min(g, overlay, out.final_vertex, trace.revealed));

        if (algo != 2) {
            // block search removes every scanned neighbour, so the
            // terminal vertex ends up with none, and its final sweep
            // alone needs ceil(live/B) blocks
            CHECK(neighbourhood(g, overlay, out.final_vertex).empty());
            const std::int64_t live_end = overlay.live_count();
            CHECK(out.steps >= (live_end + mp.block_size - 1) / mp.block_size);
        } else {
            // full descent scans once per visited vertex
            CHECK(out.steps == out.visits);
        }
    }
}

TEST_CASE("tombstone removal matches physical erasure") {
    const ModelParams mp = derive_params(120, 1.0, 0.4, 1.0);
    for (std::uint64_t rep = 0; rep < 50; ++rep) {
        const std::uint64_t rs = replication_seed({321, rep});
        const ExplicitGraph g = sample_explicit(mp, derive_stream_seed(rs, kEdgeStreamTag));
        const auto start = pick_start_vertex(derive_stream_seed(rs, kStartStreamTag), mp.n);
        CostStream c1(derive_stream_seed(rs, kCostStreamTag));
        CostStream c2(derive_stream_seed(rs, kCostStreamTag));
        const SearchOutcome production = run_agd(g, mp, c1, start);
        const SearchOutcome reference = test::reference_block_search(g, mp, c2, start);
        CHECK(test::same_outcome(production, reference));
    }
}

TEST_CASE("verify_local_min basic cases") {
    const ExplicitGraph g(3, {{0, 1}});
    std::vector<double> costs = {0.5, 0.2, std::numeric_limits<double>::quiet_NaN()};
    VertexOverlay overlay(3);
    CHECK(verify_local_min(g, overlay, 2, costs) == false); // own cost unknown
    costs[2] = 0.9;
    CHECK(verify_local_min(g, overlay, 2, costs));  // isolated vertex
    CHECK(verify_local_min(g, overlay, 1, costs));  // cheaper than its neighbour
    CHECK(!verify_local_min(g, overlay, 0, costs)); // has a cheaper neighbour
    overlay.remove(1);
    CHECK(verify_local_min(g, overlay, 0, costs)); // cheaper neighbour removed
    CHECK_THROWS_AS(verify_local_min(g, overlay, 3, costs), std::invalid_argument);
}

TEST_CASE("cheapest-improvement explores no more than first-improvement on average") {
    const ModelParams mp = derive_params(1000, 1.0, 0.5, 1.0);
    const std::int64_t reps = 300;
    std::vector<double> explored_cheapest, explored_first;
    for (std::int64_t r = 0; r < reps; ++r) {
        const std::uint64_t rs = replication_seed({4242, static_cast<std::uint64_t>(r)});
        for (int arm = 0; arm < 2; ++arm) {
            const std::uint64_t as =
                derive_stream_seed(rs, arm == 0 ? kArmOneTag : kArmTwoTag);
            const EdgeOracle oracle(mp, derive_stream_seed(as, kEdgeStreamTag));
            CostStream costs(derive_stream_seed(as, kCostStreamTag));
            const auto start = pick_start_vertex(derive_stream_seed(as, kStartStreamTag), mp.n);
            const SearchOutcome out = arm == 0 ? run_agd(oracle, mp, costs, start)
                                               : run_baseline(oracle, mp, costs, start);
            (arm == 0 ? explored_cheapest : explored_first)
                .push_back(static_cast<double>(out.explorations));
        }
    }
    const SummaryStats a = summarize(explored_cheapest);
    const SummaryStats b = summarize(explored_first);
    const double pooled_se = std::sqrt(a.variance / reps + b.variance / reps);
    CHECK(a.mean <= b.mean + 3.0 * pooled_se);
}
