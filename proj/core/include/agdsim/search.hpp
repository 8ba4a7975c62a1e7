#ifndef AGDSIM_SEARCH_HPP
#define AGDSIM_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "agdsim/graph.hpp"
#include "agdsim/model.hpp"

namespace agdsim {

/// Accounting for one local-search run.
///
/// steps        : block scans performed (S)
/// visits       : vertices the walk sat on, jumps + 1 (V)
/// explorations : cost values revealed (E); the start cost is not counted
/// final_cost   : cost of the terminal vertex, equal to the minimum of all
///                values revealed so far
struct SearchOutcome {
    std::int64_t steps = 0;
    std::int64_t visits = 1;
    std::int64_t explorations = 0;
    double final_cost = 0.0;
    bool verified_local_min = false;
    std::uint32_t final_vertex = 0;
};

/// Optional run evidence for verification and tests: revealed costs by
/// vertex (NaN when never revealed; includes the start cost), the final
/// tombstone state, and the chain of visited vertices.
struct SearchTrace {
    std::vector<double> revealed;
    std::vector<std::uint8_t> alive;
    std::vector<std::uint32_t> visit_chain;
};

/// Block search with jumps to the cheapest improving candidate.
///
/// Each step scans the next block of up to B still-present vertices in
/// index order, reveals the costs of those adjacent to the current vertex
/// (the partial neighbourhood, drawn sequentially from `costs`), jumps to
/// the cheapest one if it improves, and removes the scanned neighbours
/// (keeping the jump target). A jump restarts the scan from index 0; the
/// run ends when the current vertex survives a full sweep of the
/// remaining candidates. The final block of a sweep may be shorter than B.
SearchOutcome run_agd(const ExplicitGraph& graph, const ModelParams& params,
                      UniformSource& costs, std::uint32_t start, SearchTrace* trace = nullptr);
SearchOutcome run_agd(const EdgeOracle& oracle, const ModelParams& params,
                      UniformSource& costs, std::uint32_t start, SearchTrace* trace = nullptr);

/// Same scan, accounting and termination as run_agd, but jumps to the
/// FIRST improving candidate revealed in the block rather than the
/// cheapest one.
SearchOutcome run_baseline(const ExplicitGraph& graph, const ModelParams& params,
                           UniformSource& costs, std::uint32_t start,
                           SearchTrace* trace = nullptr);
SearchOutcome run_baseline(const EdgeOracle& oracle, const ModelParams& params,
                           UniformSource& costs, std::uint32_t start,
                           SearchTrace* trace = nullptr);

/// Full-neighbourhood descent: repeatedly scans every remaining neighbour
/// of the current vertex and moves to the cheapest while an improvement
/// exists. Needs a materialised graph.
SearchOutcome run_gd(const ExplicitGraph& graph, const ModelParams& params,
                     UniformSource& costs, std::uint32_t start, SearchTrace* trace = nullptr);

/// True iff cost(v) is strictly below the cost of every neighbour of v
/// still alive under the overlay. A live neighbour with no revealed cost
/// (NaN) cannot be confirmed and yields false. Throws for an unknown
/// vertex.
bool verify_local_min(const ExplicitGraph& graph, const VertexOverlay& overlay, std::uint32_t v,
                      const std::vector<double>& costs);

/// Uniform start vertex derived from a seed.
std::uint32_t pick_start_vertex(std::uint64_t seed, std::int64_t n);

} // namespace agdsim

#endif // AGDSIM_SEARCH_HPP
