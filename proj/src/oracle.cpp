#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "tdc/solvers.hpp"

namespace tdc {

namespace {

// Restricted-growth strings over vertices in index order: a[0] = 0 and
// a[i] <= 1 + max(a[0..i-1]). Each string is one set partition; strings
// that put two adjacent vertices in one block are cut as soon as the
// second endpoint is placed.
struct PartitionEnumerator {
    const Graph& g;
    std::vector<Color> rgs;
    std::uint64_t visited = 0;
    std::size_t best = 0;
    std::vector<Color> best_rgs;

    void enumerate(std::size_t i, Color max_block) {
        if (i == rgs.size()) {
            ++visited;
            Coloring candidate(rgs);
            if (candidate.color_count() < best && is_td_coloring(g, candidate)) {
                best = candidate.color_count();
                best_rgs = rgs;
            }
            return;
        }
        for (Color b = 1; b <= max_block + 1; ++b) {
            bool clash = false;
            for (VertexId u : g.neighbors(static_cast<VertexId>(i))) {
                if (u < i && rgs[u] == b) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            rgs[i] = b;
            enumerate(i + 1, std::max(max_block, b));
        }
    }
};

} // namespace

SolveResult td_chromatic_oracle(const Graph& g, const OracleOptions& opts) {
    const std::size_t n = g.vertex_count();
    if (n > opts.max_vertices) {
        throw std::length_error("oracle cap is " + std::to_string(opts.max_vertices) + " vertices, graph has " +
                                std::to_string(n));
    }
    if (n < 2 || g.has_isolated_vertex()) {
        throw std::invalid_argument("total dominator colouring needs >= 2 vertices and no isolated vertex");
    }
    const auto start = std::chrono::steady_clock::now();

    PartitionEnumerator e{g, std::vector<Color>(n, 1), 0, n + 1, {}};
    e.enumerate(1, 1);

    SolveResult result;
    result.value = static_cast<std::uint32_t>(e.best);
    result.coloring = Coloring(e.best_rgs);
    result.nodes_explored = e.visited;
    result.lower_bound_used = 1;
    result.upper_bound_used = static_cast<std::uint32_t>(n);
    result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return result;
}

} // namespace tdc
