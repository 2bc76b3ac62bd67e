#pragma once

#include <chrono>
#include <algorithm>
#include <cstdint>
#include <vector>

#include "tdc/solvers.hpp"

namespace tdc::detail {

// Node/time accounting shared by the backtracking solvers.
class SearchBudget {
public:
    explicit SearchBudget(const SolveOptions& opts)
        : node_limit_(opts.node_budget.value_or(0)), start_(std::chrono::steady_clock::now()) {
        if (opts.time_budget) deadline_ = start_ + *opts.time_budget;
        has_deadline_ = opts.time_budget.has_value();
    }

    // Counts one node; false once a limit is hit.
    bool tick() {
        ++nodes_;
        if (node_limit_ != 0 && nodes_ > node_limit_) exhausted_ = true;
        if (has_deadline_ && (nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline_) {
            exhausted_ = true;
        }
        return !exhausted_;
    }

    bool exhausted() const noexcept { return exhausted_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    std::chrono::nanoseconds elapsed() const {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start_);
    }

private:
    std::uint64_t node_limit_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    bool has_deadline_ = false;
    std::chrono::steady_clock::time_point start_;
    std::chrono::steady_clock::time_point deadline_{};
};

inline std::vector<VertexId> degree_order(const Graph& g) {
    std::vector<VertexId> order(g.vertex_count());
    for (VertexId v = 0; v < order.size(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
    return order;
}

} // namespace tdc::detail
