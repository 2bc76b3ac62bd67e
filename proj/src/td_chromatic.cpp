#include <algorithm>
#include <bit>
#include <stdexcept>

#include "search_budget.hpp"
#include "tdc/kernels.hpp"
#include "tdc/solvers.hpp"

namespace tdc {

namespace {

// Decides whether a TD-colouring with exactly k non-empty classes exists.
//
// Vertices are coloured in a fixed order. A vertex may open at most one new
// colour beyond those in use. After each assignment every vertex whose
// neighbourhood is fully coloured must still see a non-empty class lying
// entirely inside its neighbourhood; later assignments can only grow
// classes, so a class that already leaks outside N(w) is lost for good.
class TdSearch {
public:
    TdSearch(const std::vector<VertexMask>& adj, const std::vector<VertexId>& order, std::uint32_t k,
             detail::SearchBudget& budget)
        : adj_(adj), order_(order), k_(k), budget_(budget), classes_(k, 0), color_(adj.size(), 0) {
        complete_scratch_.reserve(adj.size());
    }

    bool run() { return place(0, 0, 0); }
    const std::vector<std::uint32_t>& colors() const noexcept { return color_; }

private:
    bool place(std::size_t depth, std::uint32_t used, VertexMask colored) {
        if (!budget_.tick()) return false;
        const std::size_t n = order_.size();
        if (depth == n) return true;

        const VertexId v = order_[depth];
        const VertexMask bit = VertexMask{1} << v;
        const VertexMask now_colored = colored | bit;
        const std::size_t remaining = n - depth - 1;
        const std::uint32_t limit = std::min(used + 1, k_);

        for (std::uint32_t c = 0; c < limit; ++c) {
            if (classes_[c] & adj_[v]) continue;
            const std::uint32_t next_used = std::max(used, c + 1);
            if (remaining < k_ - next_used) continue;

            classes_[c] |= bit;
            color_[v] = c;
            if (dominance_holds(now_colored) && place(depth + 1, next_used, now_colored)) return true;
            classes_[c] &= ~bit;
            if (budget_.exhausted()) return false;
        }
        return false;
    }

    bool dominance_holds(VertexMask colored) {
        complete_scratch_.clear();
        for (std::size_t w = 0; w < adj_.size(); ++w) {
            if ((adj_[w] & ~colored) == 0) complete_scratch_.push_back(adj_[w]);
        }
        return kernels::all_covered(classes_, complete_scratch_);
    }

    const std::vector<VertexMask>& adj_;
    const std::vector<VertexId>& order_;
    std::uint32_t k_;
    detail::SearchBudget& budget_;
    std::vector<VertexMask> classes_;
    std::vector<std::uint32_t> color_;
    std::vector<VertexMask> complete_scratch_;
};

} // namespace

SolveResult td_chromatic_number(const Graph& g, const SolveOptions& opts) {
    const std::size_t n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("total dominator colouring needs at least two vertices");
    if (g.has_isolated_vertex()) {
        throw std::invalid_argument("total dominator colouring is undefined with an isolated vertex");
    }

    detail::SearchBudget budget(opts);
    SolveResult result;

    const SolveResult chi = chromatic_number(g, opts);
    const SolveResult gamma = total_domination_number(g, opts);
    if (!chi.solved() || !gamma.solved()) {
        result.status = SolveStatus::budget_exhausted;
        result.value = std::max(chi.value, gamma.value);
        result.lower_bound_used = result.value;
        result.upper_bound_used = static_cast<std::uint32_t>(n);
        result.nodes_explored = chi.nodes_explored + gamma.nodes_explored;
        result.elapsed = budget.elapsed();
        return result;
    }

    const std::uint32_t lower = std::max(chi.value, gamma.value);
    const std::uint32_t upper = std::min<std::uint32_t>(gamma.value + chi.value, static_cast<std::uint32_t>(n));
    result.lower_bound_used = lower;
    result.upper_bound_used = upper;

    const auto adj = neighborhood_masks(g);
    const auto order = detail::degree_order(g);

    bool found = false;
    for (std::uint32_t k = lower; k <= upper; ++k) {
        TdSearch search(adj, order, k, budget);
        if (search.run()) {
            std::vector<Color> assignment(n);
            for (VertexId v = 0; v < n; ++v) assignment[v] = search.colors()[v] + 1;
            result.coloring = normalize(Coloring(std::move(assignment)));
            result.value = k;
            found = true;
            break;
        }
        if (budget.exhausted()) {
            result.status = SolveStatus::budget_exhausted;
            result.value = k;
            break;
        }
    }
    result.nodes_explored = budget.nodes() + chi.nodes_explored + gamma.nodes_explored;
    result.elapsed = budget.elapsed();

    if (result.solved()) {
        if (!found) throw std::logic_error("no TD-colouring within gamma_t + chi colours");
        if (!is_td_coloring(g, *result.coloring) || result.coloring->color_count() != result.value) {
            throw std::logic_error("TD search witness failed re-verification");
        }
    }
    return result;
}

} // namespace tdc
