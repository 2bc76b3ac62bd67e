#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tdc/coloring.hpp"
#include "tdc/graph.hpp"

namespace tdc {

/// Bumped whenever a change could alter values or witnesses; part of the
/// harness cache key.
inline constexpr const char* kSolverVersion = "tdc-solver-1";

struct SolveOptions {
    std::optional<std::uint64_t> node_budget;
    std::optional<std::chrono::milliseconds> time_budget;
};

enum class SolveStatus { optimal, budget_exhausted };

/// Outcome of an exact solve. On budget exhaustion `value` holds the best
/// proven lower bound and no witness is attached.
struct SolveResult {
    SolveStatus status = SolveStatus::optimal;
    std::uint32_t value = 0;
    std::optional<Coloring> coloring;
    std::optional<std::vector<VertexId>> vertex_set;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
    std::uint32_t lower_bound_used = 0;
    std::uint32_t upper_bound_used = 0;

    bool solved() const noexcept { return status == SolveStatus::optimal; }
};

/// Exact chromatic number with a witness proper colouring.
SolveResult chromatic_number(const Graph& g, const SolveOptions& opts = {});

/// Throws std::out_of_range on a bad vertex.
bool is_total_dominating_set(const Graph& g, std::span<const VertexId> s);

/// Exact total domination number with a witness set (sorted). Throws
/// std::invalid_argument if g has an isolated vertex.
SolveResult total_domination_number(const Graph& g, const SolveOptions& opts = {});

/// Exact total dominator chromatic number by increasing-k backtracking,
/// starting from max(chi, gamma_t). Requires at least two vertices and no
/// isolated vertex (std::invalid_argument otherwise).
SolveResult td_chromatic_number(const Graph& g, const SolveOptions& opts = {});

struct OracleOptions {
    std::size_t max_vertices = 10;
};

/// Exhaustive reference: enumerates every partition of V into independent
/// sets and checks each with is_td_coloring. Throws std::length_error past
/// the vertex cap.
SolveResult td_chromatic_oracle(const Graph& g, const OracleOptions& opts = {});

} // namespace tdc
