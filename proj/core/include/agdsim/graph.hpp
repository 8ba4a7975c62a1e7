#ifndef AGDSIM_GRAPH_HPP
#define AGDSIM_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "agdsim/model.hpp"

namespace agdsim {

/// Decision for the unordered pair {u,v}: present with probability p,
/// as a pure function of (edge_seed, pair). Both graph representations
/// share this function, so a pre-sampled graph and a lazy oracle built
/// from the same seed describe the same realisation.
bool edge_decision(std::uint64_t edge_seed, std::uint32_t u, std::uint32_t v, double p);

/// Materialised undirected graph with sorted adjacency lists.
class ExplicitGraph {
public:
    ExplicitGraph() = default;
    ExplicitGraph(std::int64_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

    std::int64_t vertex_count() const { return n_; }
    std::int64_t edge_count() const { return edge_count_; }

    bool adjacent(std::uint32_t u, std::uint32_t v) const;

    /// Neighbours of v in increasing index order.
    const std::vector<std::uint32_t>& neighbours(std::uint32_t v) const;

private:
    std::int64_t n_ = 0;
    std::int64_t edge_count_ = 0;
    std::vector<std::vector<std::uint32_t>> adjacency_;
};

inline constexpr std::int64_t kDefaultExplicitCap = 10000;

/// Samples every pair independently with probability p. Throws
/// std::invalid_argument when n exceeds `cap` (quadratic pair scan).
ExplicitGraph sample_explicit(std::int64_t n, double p, std::uint64_t edge_seed,
                              std::int64_t cap = kDefaultExplicitCap);
ExplicitGraph sample_explicit(const ModelParams& params, std::uint64_t edge_seed,
                              std::int64_t cap = kDefaultExplicitCap);

/// Lazy edge oracle: adjacency is decided per pair on first use via
/// edge_decision, so runs on graphs far beyond the explicit cap need no
/// storage. Queries repeat deterministically.
class EdgeOracle {
public:
    EdgeOracle(std::int64_t n, double p, std::uint64_t edge_seed)
        : n_(n), p_(p), edge_seed_(edge_seed) {}
    EdgeOracle(const ModelParams& params, std::uint64_t edge_seed)
        : EdgeOracle(params.n, params.p, edge_seed) {}

    std::int64_t vertex_count() const { return n_; }

    /// Throws std::invalid_argument on a self-loop or out-of-range query.
    bool query_edge(std::uint32_t u, std::uint32_t v) const;

    /// Same decision, no validation; the hot path for block scans.
    bool adjacent(std::uint32_t u, std::uint32_t v) const {
        return edge_decision(edge_seed_, u, v, p_);
    }

private:
    std::int64_t n_;
    double p_;
    std::uint64_t edge_seed_;
};

/// Tombstone overlay for vertex removals during one run; the underlying
/// graph stays immutable.
class VertexOverlay {
public:
    explicit VertexOverlay(std::int64_t n) : alive_(static_cast<std::size_t>(n), 1), live_(n) {}

    /// Adopts an existing flag vector (e.g. a SearchTrace snapshot).
    explicit VertexOverlay(std::vector<std::uint8_t> alive_flags)
        : alive_(std::move(alive_flags)), live_(0) {
        for (std::uint8_t f : alive_) live_ += f ? 1 : 0;
    }

    bool alive(std::uint32_t v) const { return alive_[v] != 0; }
    std::int64_t live_count() const { return live_; }
    std::int64_t size() const { return static_cast<std::int64_t>(alive_.size()); }

    void remove(std::uint32_t v) {
        if (alive_[v]) {
            alive_[v] = 0;
            --live_;
        }
    }

private:
    std::vector<std::uint8_t> alive_;
    std::int64_t live_;
};

/// Neighbours of v among vertices still alive under the overlay.
/// Throws std::invalid_argument for an unknown vertex.
std::vector<std::uint32_t> neighbourhood(const ExplicitGraph& graph, const VertexOverlay& overlay,
                                         std::uint32_t v);

/// Full-graph variant (no removals).
std::vector<std::uint32_t> neighbourhood(const ExplicitGraph& graph, std::uint32_t v);

/// Edge-list text fixture format: header "n=<count>", then one "u v" line
/// per edge.
void dump_edge_list(const ExplicitGraph& graph, std::ostream& out);
ExplicitGraph load_edge_list(std::istream& in);

} // namespace agdsim

#endif // AGDSIM_GRAPH_HPP
