#include "agdsim/search.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace agdsim {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
const double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_run_inputs(std::int64_t graph_n, const ModelParams& mp, std::uint32_t start) {
    if (graph_n != mp.n) throw std::invalid_argument("search: params.n does not match the graph");
    if (start >= static_cast<std::uint64_t>(mp.n))
        throw std::invalid_argument("search: start vertex out of range");
}

template <class Graph, bool kFirstImprovement>
SearchOutcome block_search(const Graph& graph, const ModelParams& mp, UniformSource& costs,
                           std::uint32_t start, SearchTrace* trace) {
    check_run_inputs(graph.vertex_count(), mp, start);
    const std::int64_t n = mp.n;
    const std::int64_t block_size = mp.block_size;

    std::vector<std::uint8_t> alive(static_cast<std::size_t>(n), 1);
    std::int64_t live = n;

    SearchOutcome out;
    std::uint32_t v = start;
    double x = costs.next();
    if (trace) {
        trace->revealed.assign(static_cast<std::size_t>(n), kNaN);
        trace->revealed[v] = x;
        trace->visit_chain.assign(1, v);
    }

    std::vector<std::uint32_t> block_nbrs;
    std::vector<double> block_costs;
    std::int64_t cursor = 0;

    for (;;) {
        block_nbrs.clear();
        block_costs.clear();
        std::int64_t c = cursor;
        std::int64_t taken = 0;
        while (c < n && taken < block_size) {
            const auto w = static_cast<std::uint32_t>(c);
            if (alive[w]) {
                ++taken;
                if (w != v && graph.adjacent(v, w)) block_nbrs.push_back(w);
            }
            ++c;
        }
        if (taken == 0) break; // sweep complete, nothing improved: v confirmed

        ++out.steps;
        for (std::uint32_t w : block_nbrs) {
            const double cw = costs.next();
            block_costs.push_back(cw);
            ++out.explorations;
            if (trace) trace->revealed[w] = cw;
        }

        std::ptrdiff_t target = -1;
        if constexpr (kFirstImprovement) {
            for (std::size_t i = 0; i < block_costs.size(); ++i) {
                if (block_costs[i] < x) {
                    target = static_cast<std::ptrdiff_t>(i);
                    break;
                }
            }
        } else {
            if (!block_costs.empty()) {
                std::size_t best = 0;
                for (std::size_t i = 1; i < block_costs.size(); ++i) {
                    if (block_costs[i] < block_costs[best]) best = i;
                }
                if (block_costs[best] < x) target = static_cast<std::ptrdiff_t>(best);
            }
        }

        for (std::uint32_t w : block_nbrs) alive[w] = 0;
        live -= static_cast<std::int64_t>(block_nbrs.size());
        if (target >= 0) {
            alive[v] = 0;
            --live;
            v = block_nbrs[static_cast<std::size_t>(target)];
            alive[v] = 1;
            ++live;
            x = block_costs[static_cast<std::size_t>(target)];
            ++out.visits;
            cursor = 0;
            if (trace) trace->visit_chain.push_back(v);
        } else {
            cursor = c;
        }

        if (live < 1) {
            throw std::logic_error("block search: every vertex removed before termination");
        }
    }

    out.final_cost = x;
    out.final_vertex = v;
    out.verified_local_min = true; // the terminating sweep left no live neighbour
    if (trace) trace->alive = std::move(alive);
    return out;
}

} // namespace

SearchOutcome run_agd(const ExplicitGraph& graph, const ModelParams& params, UniformSource& costs,
                      std::uint32_t start, SearchTrace* trace) {
    return block_search<ExplicitGraph, false>(graph, params, costs, start, trace);
}

SearchOutcome run_agd(const EdgeOracle& oracle, const ModelParams& params, UniformSource& costs,
                      std::uint32_t start, SearchTrace* trace) {
    return block_search<EdgeOracle, false>(oracle, params, costs, start, trace);
}

SearchOutcome run_baseline(const ExplicitGraph& graph, const ModelParams& params,
                           UniformSource& costs, std::uint32_t start, SearchTrace* trace) {
    return block_search<ExplicitGraph, true>(graph, params, costs, start, trace);
}

SearchOutcome run_baseline(const EdgeOracle& oracle, const ModelParams& params,
                           UniformSource& costs, std::uint32_t start, SearchTrace* trace) {
    return block_search<EdgeOracle, true>(oracle, params, costs, start, trace);
}

SearchOutcome run_gd(const ExplicitGraph& graph, const ModelParams& params, UniformSource& costs,
                     std::uint32_t start, SearchTrace* trace) {
    check_run_inputs(graph.vertex_count(), params, start);
    const std::int64_t n = params.n;

    std::vector<std::uint8_t> alive(static_cast<std::size_t>(n), 1);

    SearchOutcome out;
    std::uint32_t v = start;
    double x = costs.next();
    if (trace) {
        trace->revealed.assign(static_cast<std::size_t>(n), kNaN);
        trace->revealed[v] = x;
        trace->visit_chain.assign(1, v);
    }

    std::vector<std::uint32_t> nbrs;
    std::vector<double> nbr_costs;
    for (;;) {
        nbrs.clear();
        nbr_costs.clear();
        for (std::uint32_t w : graph.neighbours(v)) {
            if (alive[w]) nbrs.push_back(w);
        }
        ++out.steps;
        for (std::uint32_t w : nbrs) {
            const double cw = costs.next();
            nbr_costs.push_back(cw);
            ++out.explorations;
            if (trace) trace->revealed[w] = cw;
        }

        std::ptrdiff_t best = -1;
        for (std::size_t i = 0; i < nbr_costs.size(); ++i) {
            if (best < 0 || nbr_costs[i] < nbr_costs[static_cast<std::size_t>(best)]) {
                best = static_cast<std::ptrdiff_t>(i);
            }
        }
        if (best < 0 || nbr_costs[static_cast<std::size_t>(best)] >= x) {
            break; // no remaining improving neighbour; the scan doubles as verification
        }

        for (std::uint32_t w : nbrs) alive[w] = 0;
        alive[v] = 0;
        v = nbrs[static_cast<std::size_t>(best)];
        alive[v] = 1;
        x = nbr_costs[static_cast<std::size_t>(best)];
        ++out.visits;
        if (trace) trace->visit_chain.push_back(v);
    }

    out.final_cost = x;
    out.final_vertex = v;
    out.verified_local_min = true;
    if (trace) trace->alive = std::move(alive);
    return out;
}

bool verify_local_min(const ExplicitGraph& graph, const VertexOverlay& overlay, std::uint32_t v,
                      const std::vector<double>& costs) {
    if (v >= graph.vertex_count()) throw std::invalid_argument("verify_local_min: unknown vertex");
    if (costs.size() != static_cast<std::size_t>(graph.vertex_count()))
        throw std::invalid_argument("verify_local_min: cost table size mismatch");
    const double xv = costs[v];
    if (std::isnan(xv)) return false;
    for (std::uint32_t w : graph.neighbours(v)) {
        if (!overlay.alive(w)) continue;
        const double xw = costs[w];
        if (std::isnan(xw) || !(xv < xw)) return false;
    }
    return true;
}

std::uint32_t pick_start_vertex(std::uint64_t seed, std::int64_t n) {
    return uniform_index(mix64(seed + kGolden), static_cast<std::uint64_t>(n));
}

} // namespace agdsim
