#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "search_budget.hpp"
#include "tdc/solvers.hpp"

namespace tdc {

bool is_total_dominating_set(const Graph& g, std::span<const VertexId> s) {
    std::vector<char> in_set(g.vertex_count(), 0);
    for (VertexId v : s) {
        if (v >= g.vertex_count()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        in_set[v] = 1;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto nbrs = g.neighbors(v);
        if (std::none_of(nbrs.begin(), nbrs.end(), [&](VertexId u) { return in_set[u] != 0; })) return false;
    }
    return true;
}

namespace {

// Exact-size search: the lowest-index vertex without a neighbour in the set
// forces one of its neighbours into the set.
class TotalDomSearch {
public:
    TotalDomSearch(const std::vector<VertexMask>& adj, std::uint32_t max_degree, detail::SearchBudget& budget)
        : adj_(adj), max_degree_(max_degree), budget_(budget) {
        all_ = adj.size() == 64 ? ~VertexMask{0} : (VertexMask{1} << adj.size()) - 1;
    }

    bool run(std::uint32_t size) {
        size_ = size;
        return extend(0, all_, 0);
    }
    VertexMask chosen() const noexcept { return chosen_; }

private:
    bool extend(VertexMask chosen, VertexMask undominated, std::uint32_t count) {
        if (!budget_.tick()) return false;
        if (undominated == 0) {
            chosen_ = chosen;
            return true;
        }
        const std::uint32_t left = size_ - count;
        if (left == 0) return false;
        if (static_cast<std::uint64_t>(std::popcount(undominated)) > std::uint64_t{left} * max_degree_) return false;

        const int u = std::countr_zero(undominated);
        VertexMask options = adj_[u] & ~chosen;
        while (options) {
            const int w = std::countr_zero(options);
            options &= options - 1;
            // w dominates exactly its own neighbours.
            if (extend(chosen | VertexMask{1} << w, undominated & ~adj_[w], count + 1)) return true;
            if (budget_.exhausted()) return false;
        }
        return false;
    }

    const std::vector<VertexMask>& adj_;
    std::uint32_t max_degree_;
    detail::SearchBudget& budget_;
    VertexMask all_ = 0;
    VertexMask chosen_ = 0;
    std::uint32_t size_ = 0;
};

} // namespace

SolveResult total_domination_number(const Graph& g, const SolveOptions& opts) {
    if (g.has_isolated_vertex()) {
        throw std::invalid_argument("total domination number is undefined with an isolated vertex");
    }
    detail::SearchBudget budget(opts);
    SolveResult result;
    const std::size_t n = g.vertex_count();
    if (n == 0) {
        result.vertex_set = std::vector<VertexId>{};
        result.elapsed = budget.elapsed();
        return result;
    }
    const auto adj = neighborhood_masks(g);
    std::uint32_t max_degree = 0;
    for (VertexId v = 0; v < n; ++v) max_degree = std::max<std::uint32_t>(max_degree, g.degree(v));
    const auto lower = static_cast<std::uint32_t>(std::max<std::size_t>(2, (n + max_degree - 1) / max_degree));
    result.lower_bound_used = lower;
    result.upper_bound_used = static_cast<std::uint32_t>(n);

    TotalDomSearch search(adj, max_degree, budget);
    for (std::uint32_t size = lower; size <= n; ++size) {
        if (search.run(size)) {
            std::vector<VertexId> set;
            for (VertexMask m = search.chosen(); m; m &= m - 1) {
                set.push_back(static_cast<VertexId>(std::countr_zero(m)));
            }
            result.value = static_cast<std::uint32_t>(set.size());
            result.vertex_set = std::move(set);
            break;
        }
        if (budget.exhausted()) {
            result.status = SolveStatus::budget_exhausted;
            result.value = size;
            break;
        }
    }
    result.nodes_explored = budget.nodes();
    result.elapsed = budget.elapsed();
    if (result.vertex_set && !is_total_dominating_set(g, *result.vertex_set)) {
        throw std::logic_error("total domination search produced an invalid set");
    }
    return result;
}

} // namespace tdc
