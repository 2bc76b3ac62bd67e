#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tdc {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted and duplicate-free, so each list doubles
/// as the neighbour set. A default-constructed graph has no vertices.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range endpoints throw
    /// std::invalid_argument.
    static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);
    static Graph from_edges(std::size_t vertex_count, std::initializer_list<Edge> edges) {
        return from_edges(vertex_count, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Open neighbourhood of v. Throws std::out_of_range for v >= n.
    std::span<const VertexId> neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    bool has_edge(VertexId u, VertexId v) const;

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool is_connected() const;
    bool has_isolated_vertex() const;

    /// Re-checks symmetry, loop-freeness and set semantics. Throws
    /// std::logic_error on violation.
    void validate() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Label-sensitive cache key: vertex/edge counts plus an FNV-1a hash of the
/// sorted edge list. Not an isomorphism invariant.
std::string canonical_key(const Graph& g);

/// Bitmask view used by the exact solvers. Bit i is vertex i.
using VertexMask = std::uint64_t;
inline constexpr std::size_t kMaskCapacity = 64;

/// Neighbourhood masks, one per vertex. Throws std::length_error when the
/// graph has more than kMaskCapacity vertices.
std::vector<VertexMask> neighborhood_masks(const Graph& g);

} // namespace tdc
