#include "tdc/families.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace tdc {

Graph basic_family(BasicKind kind, std::uint32_t n) {
    std::vector<Edge> edges;
    switch (kind) {
    case BasicKind::path:
        if (n < 1) throw std::invalid_argument("path needs n >= 1");
        for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        break;
    case BasicKind::cycle:
        if (n < 3) throw std::invalid_argument("cycle needs n >= 3, got " + std::to_string(n));
        for (VertexId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(n - 1, 0);
        break;
    case BasicKind::complete:
        if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
        for (VertexId i = 0; i < n; ++i)
            for (VertexId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        break;
    case BasicKind::empty:
        break;
    }
    return Graph::from_edges(n, edges);
}

Graph corona(const Graph& g, const Graph& h) {
    const auto ng = static_cast<VertexId>(g.vertex_count());
    const auto nh = static_cast<VertexId>(h.vertex_count());
    std::vector<Edge> edges = g.edges();
    const auto h_edges = h.edges();
    for (VertexId i = 0; i < ng; ++i) {
        const VertexId base = ng + i * nh;
        for (auto [a, b] : h_edges) edges.emplace_back(base + a, base + b);
        for (VertexId x = 0; x < nh; ++x) edges.emplace_back(i, base + x);
    }
    return Graph::from_edges(std::size_t{ng} * (1 + nh), edges);
}

Graph join(const Graph& g, const Graph& h) {
    const auto ng = static_cast<VertexId>(g.vertex_count());
    const auto nh = static_cast<VertexId>(h.vertex_count());
    std::vector<Edge> edges = g.edges();
    for (auto [a, b] : h.edges()) edges.emplace_back(ng + a, ng + b);
    for (VertexId u = 0; u < ng; ++u)
        for (VertexId v = 0; v < nh; ++v) edges.emplace_back(u, ng + v);
    return Graph::from_edges(std::size_t{ng} + nh, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const auto ng = static_cast<VertexId>(g.vertex_count());
    const auto nh = static_cast<VertexId>(h.vertex_count());
    std::vector<Edge> edges;
    const auto g_edges = g.edges();
    const auto h_edges = h.edges();
    for (VertexId u = 0; u < ng; ++u)
        for (auto [a, b] : h_edges) edges.emplace_back(u * nh + a, u * nh + b);
    for (auto [a, b] : g_edges)
        for (VertexId v = 0; v < nh; ++v) edges.emplace_back(a * nh + v, b * nh + v);
    return Graph::from_edges(std::size_t{ng} * nh, edges);
}

Graph friendship_family(std::uint32_t q, std::uint32_t blades) {
    if (q < 3) throw std::invalid_argument("friendship family needs q >= 3");
    if (blades < 1) throw std::invalid_argument("friendship family needs at least one blade");
    const VertexId span = q - 1;
    std::vector<Edge> edges;
    for (VertexId i = 0; i < blades; ++i) {
        const VertexId first = 1 + i * span;
        const VertexId last = (i + 1) * span;
        edges.emplace_back(0, first);
        for (VertexId v = first; v < last; ++v) edges.emplace_back(v, v + 1);
        edges.emplace_back(last, 0);
    }
    return Graph::from_edges(std::size_t{blades} * span + 1, edges);
}

Graph grid(std::uint32_t rows, std::uint32_t cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs rows, cols >= 1");
    return cartesian_product(path_graph(rows), path_graph(cols));
}

Graph chain_cactus(ChainKind kind, std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("chain cactus needs length >= 1");
    std::vector<Edge> edges;
    if (kind == ChainKind::triangular) {
        for (VertexId i = 0; i < n; ++i) {
            const VertexId c = 2 * i;
            edges.emplace_back(c, c + 1);
            edges.emplace_back(c + 1, c + 2);
            edges.emplace_back(c + 2, c);
        }
        return Graph::from_edges(2 * std::size_t{n} + 1, edges);
    }
    for (VertexId i = 0; i < n; ++i) {
        const VertexId c = 3 * i;
        edges.emplace_back(c, c + 1);
        edges.emplace_back(c + 1, c + 2);
        edges.emplace_back(c + 2, c + 3);
        edges.emplace_back(c + 3, c);
    }
    return Graph::from_edges(3 * std::size_t{n} + 1, edges);
}

Graph realize(const FamilySpec& spec) {
    switch (spec.kind()) {
    case FamilyKind::path: return path_graph(spec.first());
    case FamilyKind::cycle: return cycle_graph(spec.first());
    case FamilyKind::complete: return complete_graph(spec.first());
    case FamilyKind::empty: return empty_graph(spec.first());
    case FamilyKind::friendship: return friendship_family(spec.first(), spec.second());
    case FamilyKind::ladder: return ladder(spec.first());
    case FamilyKind::grid: return grid(spec.first(), spec.second());
    case FamilyKind::tri_chain: return chain_cactus(ChainKind::triangular, spec.first());
    case FamilyKind::ortho_chain: return chain_cactus(ChainKind::ortho, spec.first());
    case FamilyKind::corona: return corona(realize(spec.left()), realize(spec.right()));
    case FamilyKind::join: return join(realize(spec.left()), realize(spec.right()));
    case FamilyKind::cart: return cartesian_product(realize(spec.left()), realize(spec.right()));
    }
    throw std::logic_error("unhandled family kind");
}

} // namespace tdc
