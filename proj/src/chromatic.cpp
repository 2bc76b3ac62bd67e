#include <algorithm>
#include <bit>
#include <stdexcept>

#include "search_budget.hpp"
#include "tdc/solvers.hpp"

namespace tdc {

namespace {

// Greedy clique on the degree order; a cheap lower bound.
std::uint32_t greedy_clique(const std::vector<VertexMask>& adj, const std::vector<VertexId>& order) {
    std::uint32_t best = 0;
    for (VertexId start : order) {
        VertexMask candidates = adj[start];
        std::uint32_t size = 1;
        for (VertexId v : order) {
            if (candidates >> v & 1) {
                ++size;
                candidates &= adj[v];
            }
        }
        best = std::max(best, size);
    }
    return best;
}

class KColorSearch {
public:
    KColorSearch(const std::vector<VertexMask>& adj, const std::vector<VertexId>& order,
                 std::uint32_t k, detail::SearchBudget& budget)
        : adj_(adj), order_(order), k_(k), budget_(budget), classes_(k, 0), color_(adj.size(), 0) {}

    bool run() { return place(0, 0); }
    const std::vector<std::uint32_t>& colors() const { return color_; }

private:
    bool place(std::size_t depth, std::uint32_t used) {
        if (!budget_.tick()) return false;
        if (depth == order_.size()) return true;
        const VertexId v = order_[depth];
        const std::uint32_t limit = std::min(used + 1, k_);
        for (std::uint32_t c = 0; c < limit; ++c) {
            if (classes_[c] & adj_[v]) continue;
            classes_[c] |= VertexMask{1} << v;
            color_[v] = c;
            if (place(depth + 1, std::max(used, c + 1))) return true;
            classes_[c] &= ~(VertexMask{1} << v);
            if (budget_.exhausted()) return false;
        }
        return false;
    }

    const std::vector<VertexMask>& adj_;
    const std::vector<VertexId>& order_;
    std::uint32_t k_;
    detail::SearchBudget& budget_;
    std::vector<VertexMask> classes_;
    std::vector<std::uint32_t> color_;
};

} // namespace

SolveResult chromatic_number(const Graph& g, const SolveOptions& opts) {
    detail::SearchBudget budget(opts);
    SolveResult result;
    const std::size_t n = g.vertex_count();
    if (n == 0) {
        result.coloring = Coloring{};
        result.elapsed = budget.elapsed();
        return result;
    }
    const auto adj = neighborhood_masks(g);
    const auto order = detail::degree_order(g);
    const std::uint32_t lower = greedy_clique(adj, order);
    result.lower_bound_used = lower;
    result.upper_bound_used = static_cast<std::uint32_t>(n);

    for (std::uint32_t k = lower; k <= n; ++k) {
        KColorSearch search(adj, order, k, budget);
        if (search.run()) {
            std::vector<Color> assignment(n);
            for (VertexId v = 0; v < n; ++v) assignment[v] = search.colors()[v] + 1;
            result.coloring = normalize(Coloring(std::move(assignment)));
            result.value = k;
            break;
        }
        if (budget.exhausted()) {
            result.status = SolveStatus::budget_exhausted;
            result.value = k;
            break;
        }
    }
    result.nodes_explored = budget.nodes();
    result.elapsed = budget.elapsed();
    if (result.coloring && !is_proper(g, *result.coloring)) {
        throw std::logic_error("chromatic search produced an improper colouring");
    }
    return result;
}

} // namespace tdc
