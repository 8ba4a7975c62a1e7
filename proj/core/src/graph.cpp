#include "agdsim/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace agdsim {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

void check_pair(std::int64_t n, std::uint32_t u, std::uint32_t v) {
    if (u == v) throw std::invalid_argument("edge query: self loops are not part of the model");
    if (u >= n || v >= n) throw std::invalid_argument("edge query: vertex out of range");
}
} // namespace

bool edge_decision(std::uint64_t edge_seed, std::uint32_t u, std::uint32_t v, double p) {
    if (p <= 0.0) return false;
    const std::uint32_t a = u < v ? u : v;
    const std::uint32_t b = u < v ? v : u;
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    const std::uint64_t word = mix64((edge_seed ^ mix64(key + kGolden)) + kGolden);
    return unit_interval(word) < p;
}

ExplicitGraph::ExplicitGraph(std::int64_t n,
                             std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
    : n_(n), adjacency_(static_cast<std::size_t>(n)) {
    for (const auto& [u, v] : edges) {
        check_pair(n_, u, v);
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
        ++edge_count_;
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
}

bool ExplicitGraph::adjacent(std::uint32_t u, std::uint32_t v) const {
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

const std::vector<std::uint32_t>& ExplicitGraph::neighbours(std::uint32_t v) const {
    if (v >= n_) throw std::invalid_argument("neighbours: vertex out of range");
    return adjacency_[v];
}

ExplicitGraph sample_explicit(std::int64_t n, double p, std::uint64_t edge_seed,
                              std::int64_t cap) {
    if (n < 1) throw std::invalid_argument("sample_explicit: n must be >= 1");
    if (n > cap) {
        std::ostringstream os;
        os << "sample_explicit: n = " << n << " exceeds the explicit-graph cap " << cap;
        throw std::invalid_argument(os.str());
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t u = 0; u + 1 < static_cast<std::uint64_t>(n); ++u) {
        for (std::uint32_t v = u + 1; v < static_cast<std::uint64_t>(n); ++v) {
            if (edge_decision(edge_seed, u, v, p)) edges.emplace_back(u, v);
        }
    }
    return ExplicitGraph(n, std::move(edges));
}

ExplicitGraph sample_explicit(const ModelParams& params, std::uint64_t edge_seed,
                              std::int64_t cap) {
    return sample_explicit(params.n, params.p, edge_seed, cap);
}

bool EdgeOracle::query_edge(std::uint32_t u, std::uint32_t v) const {
    check_pair(n_, u, v);
    return adjacent(u, v);
}

std::vector<std::uint32_t> neighbourhood(const ExplicitGraph& graph, const VertexOverlay& overlay,
                                         std::uint32_t v) {
    if (v >= graph.vertex_count()) throw std::invalid_argument("neighbourhood: unknown vertex");
    if (!overlay.alive(v)) throw std::invalid_argument("neighbourhood: vertex was removed");
    std::vector<std::uint32_t> out;
    for (std::uint32_t w : graph.neighbours(v)) {
        if (overlay.alive(w)) out.push_back(w);
    }
    return out;
}

std::vector<std::uint32_t> neighbourhood(const ExplicitGraph& graph, std::uint32_t v) {
    if (v >= graph.vertex_count()) throw std::invalid_argument("neighbourhood: unknown vertex");
    return graph.neighbours(v);
}

void dump_edge_list(const ExplicitGraph& graph, std::ostream& out) {
    out << "n=" << graph.vertex_count() << '\n';
    for (std::uint32_t u = 0; u < static_cast<std::uint64_t>(graph.vertex_count()); ++u) {
        for (std::uint32_t v : graph.neighbours(u)) {
            if (u < v) out << u << ' ' << v << '\n';
        }
    }
}

ExplicitGraph load_edge_list(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("n=", 0) != 0) {
        throw std::invalid_argument("load_edge_list: missing n=<count> header");
    }
    const std::int64_t n = std::stoll(header.substr(2));
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::uint32_t u = 0, v = 0;
    while (in >> u >> v) edges.emplace_back(u, v);
    return ExplicitGraph(n, std::move(edges));
}

} // namespace agdsim
