#include "tdc/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace tdc {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    Graph g;
    g.adjacency_.resize(vertex_count);
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has an endpoint out of range for " +
                                        std::to_string(vertex_count) + " vertices");
        }
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        }
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        list.shrink_to_fit();
        degree_sum += list.size();
    }
    g.edge_count_ = degree_sum / 2;
    return g;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    if (v >= adjacency_.size()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    return adjacency_[v];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto list = neighbors(u);
    if (v >= adjacency_.size()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adjacency_.size(); ++u) {
        for (VertexId v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::is_connected() const {
    const std::size_t n = adjacency_.size();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : adjacency_[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

bool Graph::has_isolated_vertex() const {
    return std::any_of(adjacency_.begin(), adjacency_.end(),
                       [](const auto& list) { return list.empty(); });
}

void Graph::validate() const {
    const std::size_t n = adjacency_.size();
    std::size_t degree_sum = 0;
    for (VertexId u = 0; u < n; ++u) {
        const auto& list = adjacency_[u];
        if (!std::is_sorted(list.begin(), list.end()) ||
            std::adjacent_find(list.begin(), list.end()) != list.end()) {
            throw std::logic_error("adjacency of vertex " + std::to_string(u) + " is not a set");
        }
        for (VertexId v : list) {
            if (v >= n) throw std::logic_error("neighbour out of range");
            if (v == u) throw std::logic_error("self-loop at vertex " + std::to_string(u));
            if (!std::binary_search(adjacency_[v].begin(), adjacency_[v].end(), u)) {
                throw std::logic_error("asymmetric adjacency between " + std::to_string(u) +
                                       " and " + std::to_string(v));
            }
        }
        degree_sum += list.size();
    }
    if (degree_sum != 2 * edge_count_) throw std::logic_error("edge count out of sync");
}

std::string canonical_key(const Graph& g) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    auto mix = [&hash](std::uint32_t word) {
        for (int i = 0; i < 4; ++i) {
            hash ^= (word >> (8 * i)) & 0xffU;
            hash *= 0x100000001b3ULL;
        }
    };
    mix(static_cast<std::uint32_t>(g.vertex_count()));
    for (auto [u, v] : g.edges()) {
        mix(u);
        mix(v);
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return "n" + std::to_string(g.vertex_count()) + "m" + std::to_string(g.edge_count()) + "-" + buf;
}

std::vector<VertexMask> neighborhood_masks(const Graph& g) {
    if (g.vertex_count() > kMaskCapacity) {
        throw std::length_error("graph has " + std::to_string(g.vertex_count()) +
                                " vertices; bitmask solvers support at most 64");
    }
    std::vector<VertexMask> masks(g.vertex_count(), 0);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v : g.neighbors(u)) masks[u] |= VertexMask{1} << v;
    }
    return masks;
}

} // namespace tdc
