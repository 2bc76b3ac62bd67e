#include "tdc/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "tdc/kernels.hpp"

namespace tdc {

Coloring::Coloring(std::vector<Color> assignment) : assignment_(std::move(assignment)) {
    if (std::find(assignment_.begin(), assignment_.end(), Color{0}) != assignment_.end()) {
        throw std::invalid_argument("colours are 1-based; 0 is not a colour");
    }
    std::vector<Color> distinct = assignment_;
    std::sort(distinct.begin(), distinct.end());
    color_count_ = static_cast<std::size_t>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
}

Color Coloring::max_color() const noexcept {
    return assignment_.empty() ? 0 : *std::max_element(assignment_.begin(), assignment_.end());
}

bool Coloring::is_normalized() const noexcept {
    Color next = 1;
    for (Color c : assignment_) {
        if (c > next) return false;
        if (c == next) ++next;
    }
    return true;
}

Coloring normalize(const Coloring& c) {
    std::unordered_map<Color, Color> relabel;
    std::vector<Color> out;
    out.reserve(c.size());
    for (Color col : c.assignment()) {
        auto [it, inserted] = relabel.try_emplace(col, static_cast<Color>(relabel.size() + 1));
        out.push_back(it->second);
    }
    return Coloring(std::move(out));
}

namespace {

void require_sized(const Graph& g, const Coloring& c) {
    if (c.size() != g.vertex_count()) {
        throw std::invalid_argument("colouring has " + std::to_string(c.size()) +
                                    " entries for a graph on " + std::to_string(g.vertex_count()) +
                                    " vertices");
    }
}

// Class masks indexed by colour-1 after normalisation, plus the colour each
// index stands for in the caller's labelling (ascending).
struct ClassMasks {
    std::vector<std::uint64_t> masks;
    std::vector<Color> colors;
};

ClassMasks class_masks(const Coloring& c) {
    ClassMasks out;
    out.colors.assign(c.assignment().begin(), c.assignment().end());
    std::sort(out.colors.begin(), out.colors.end());
    out.colors.erase(std::unique(out.colors.begin(), out.colors.end()), out.colors.end());
    out.masks.assign(out.colors.size(), 0);
    for (VertexId v = 0; v < c.size(); ++v) {
        auto idx = std::lower_bound(out.colors.begin(), out.colors.end(), c[v]) - out.colors.begin();
        out.masks[static_cast<std::size_t>(idx)] |= std::uint64_t{1} << v;
    }
    return out;
}

// General path for graphs beyond the bitmask capacity.
std::optional<Color> witness_by_classes(const Graph& g, const Coloring& c, VertexId v) {
    std::vector<Color> colors(c.assignment().begin(), c.assignment().end());
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    auto nbrs = g.neighbors(v);
    for (Color col : colors) {
        bool inside = true;
        for (VertexId u = 0; u < c.size() && inside; ++u) {
            if (c[u] == col && !std::binary_search(nbrs.begin(), nbrs.end(), u)) inside = false;
        }
        if (inside) return col;
    }
    return std::nullopt;
}

} // namespace

bool is_proper(const Graph& g, const Coloring& c) {
    require_sized(g, c);
    for (auto [u, v] : g.edges()) {
        if (c[u] == c[v]) return false;
    }
    return true;
}

std::optional<Color> dominated_class_witness(const Graph& g, const Coloring& c, VertexId v) {
    if (!is_proper(g, c)) throw std::invalid_argument("colouring is not proper");
    auto nbrs = g.neighbors(v);
    if (g.vertex_count() > kMaskCapacity) return witness_by_classes(g, c, v);

    std::uint64_t nmask = 0;
    for (VertexId u : nbrs) nmask |= std::uint64_t{1} << u;
    const ClassMasks classes = class_masks(c);
    const auto idx = kernels::first_subset(classes.masks, nmask);
    if (idx == kernels::npos) return std::nullopt;
    return classes.colors[static_cast<std::size_t>(idx)];
}

bool is_td_coloring(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) return false;
    if (g.has_isolated_vertex()) return false;
    if (g.vertex_count() > kMaskCapacity) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (!witness_by_classes(g, c, v)) return false;
        }
        return true;
    }
    const ClassMasks classes = class_masks(c);
    const auto nmasks = neighborhood_masks(g);
    return kernels::all_covered(classes.masks, nmasks);
}

} // namespace tdc
