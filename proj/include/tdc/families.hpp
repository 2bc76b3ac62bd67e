#pragma once

#include <cstdint>

#include "tdc/family_spec.hpp"
#include "tdc/graph.hpp"

namespace tdc {

// Labelling conventions are part of the contract: certificates refer to
// these vertex indices.

enum class BasicKind { path, cycle, complete, empty };

/// path: edges (i, i+1). cycle: path plus (n-1, 0). complete: all pairs.
/// empty: no edges. Throws std::invalid_argument below the minimum order
/// (path/complete n >= 1, cycle n >= 3).
Graph basic_family(BasicKind kind, std::uint32_t n);

inline Graph path_graph(std::uint32_t n) { return basic_family(BasicKind::path, n); }
inline Graph cycle_graph(std::uint32_t n) { return basic_family(BasicKind::cycle, n); }
inline Graph complete_graph(std::uint32_t n) { return basic_family(BasicKind::complete, n); }
inline Graph empty_graph(std::uint32_t n) { return basic_family(BasicKind::empty, n); }

/// G's vertices keep labels 0..|G|-1; copy i of H is the block starting at
/// |G| + i*|H|, and vertex i of G is joined to every vertex of copy i.
Graph corona(const Graph& g, const Graph& h);

/// G's vertices first, then H's shifted by |G|; every G-H pair adjacent.
Graph join(const Graph& g, const Graph& h);

/// Vertex (u, v) is labelled u*|H| + v.
Graph cartesian_product(const Graph& g, const Graph& h);

/// n cycles of length q sharing vertex 0. Blade i is the path on vertices
/// 1+i(q-1) .. (i+1)(q-1) whose two ends are joined to 0.
Graph friendship_family(std::uint32_t q, std::uint32_t blades);

/// Row-major m x n grid, identical to cartesian_product(path(m), path(n)).
Graph grid(std::uint32_t rows, std::uint32_t cols);
inline Graph ladder(std::uint32_t n) { return grid(2, n); }

enum class ChainKind { triangular, ortho };

/// triangular: triangle i is {2i, 2i+1, 2i+2}; chain vertices are the even
/// labels. ortho: square i is the 4-cycle 3i - 3i+1 - 3i+2 - 3i+3 - 3i, so
/// consecutive cut-vertices 3i and 3i+3 are adjacent.
Graph chain_cactus(ChainKind kind, std::uint32_t n);

Graph realize(const FamilySpec& spec);

} // namespace tdc
