#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "agdsim/graph.hpp"
#include "agdsim/search.hpp"
#include "support/test_support.hpp"

using namespace agdsim;

TEST_CASE("degenerate sampling probabilities") {
    const ExplicitGraph sure = sample_explicit(2, 1.0, 7);
    CHECK(sure.edge_count() == 1);
    CHECK(sure.adjacent(0, 1));

    const ExplicitGraph empty = sample_explicit(100, 0.0, 7);
    CHECK(empty.edge_count() == 0);
}

TEST_CASE("edge count matches the binomial moments") {
    const ModelParams mp = derive_params(200, 2.0, 0.5, 1.0);
    const double pairs = 200.0 * 199.0 / 2.0;
    const double mean = mp.p * pairs;
    const double sigma = std::sqrt(pairs * mp.p * (1.0 - mp.p));
    const ExplicitGraph g = sample_explicit(mp, 11);
    CHECK(std::abs(static_cast<double>(g.edge_count()) - mean) <= 3.0 * sigma);
}

TEST_CASE("explicit sampling honors the cap") {
    CHECK_THROWS_AS(sample_explicit(101, 0.5, 1, 100), std::invalid_argument);
}

TEST_CASE("oracle queries are cached-equivalent and symmetric") {
    const EdgeOracle oracle(1000, 0.3, 99);
    CHECK(oracle.query_edge(3, 7) == oracle.query_edge(3, 7));
    CHECK(oracle.query_edge(3, 7) == oracle.query_edge(7, 3));
    CHECK_THROWS_AS(oracle.query_edge(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(oracle.query_edge(0, 1000), std::invalid_argument);
}

TEST_CASE("oracle hit fraction matches p") {
    const double p = 0.01;
    const EdgeOracle oracle(200000, p, 4242);
    const int n_pairs = 100000;
    int hits = 0;
    for (int k = 0; k < n_pairs; ++k) {
        if (oracle.query_edge(2 * k, 2 * k + 1)) ++hits;
    }
    const double sigma = std::sqrt(p * (1 - p) / n_pairs);
    CHECK(std::abs(static_cast<double>(hits) / n_pairs - p) <= 3.0 * sigma);
}

TEST_CASE("neighbourhood on a path graph, with and without removals") {
    const ExplicitGraph path(3, {{0, 1}, {1, 2}});
    CHECK(neighbourhood(path, 1) == std::vector<std::uint32_t>{0, 2});
    CHECK(neighbourhood(ExplicitGraph(3, {{0, 1}}), 2).empty());

    VertexOverlay overlay(3);
    overlay.remove(0);
    CHECK(neighbourhood(path, overlay, 1) == std::vector<std::uint32_t>{2});
    CHECK(overlay.live_count() == 2);
    CHECK_THROWS_AS(neighbourhood(path, 5), std::invalid_argument);
}

TEST_CASE("degree of a vertex has mean p(n-1)") {
    const std::int64_t n = 400;
    const double p = 0.05;
    const ExplicitGraph g = sample_explicit(n, p, 31);
    const double mean_degree = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);
    const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
    const double sigma = 2.0 * std::sqrt(pairs * p * (1 - p)) / static_cast<double>(n);
    CHECK(std::abs(mean_degree - p * (n - 1)) <= 3.0 * sigma);
}

TEST_CASE("explicit graph and oracle are exchangeable under one seed") {
    const ModelParams mp = derive_params(300, 1.0, 0.5, 1.0);
    for (std::uint64_t rep = 0; rep < 20; ++rep) {
        const std::uint64_t rs = replication_seed({555, rep});
        const std::uint64_t edge_seed = derive_stream_seed(rs, kEdgeStreamTag);
        const ExplicitGraph g = sample_explicit(mp, edge_seed);
        const EdgeOracle oracle(mp, edge_seed);
        const auto start = pick_start_vertex(derive_stream_seed(rs, kStartStreamTag), mp.n);

        CostStream c1(derive_stream_seed(rs, kCostStreamTag));
        CostStream c2(derive_stream_seed(rs, kCostStreamTag));
        const SearchOutcome a = run_agd(g, mp, c1, start);
        const SearchOutcome b = run_agd(oracle, mp, c2, start);
        CHECK(test::same_outcome(a, b));
    }
}

TEST_CASE("edge list dump/load round trip") {
    const ExplicitGraph g = sample_explicit(50, 0.1, 77);
    std::stringstream buf;
    dump_edge_list(g, buf);
    const ExplicitGraph back = load_edge_list(buf);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edge_count() == g.edge_count());
    for (std::uint32_t v = 0; v < 50; ++v) {
        CHECK(back.neighbours(v) == g.neighbours(v));
    }

    std::stringstream bad("edges first\n0 1\n");
    CHECK_THROWS_AS(load_edge_list(bad), std::invalid_argument);
}
