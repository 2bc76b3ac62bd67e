#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

using Color = std::uint32_t;

/// Vertex colouring with colours drawn from 1, 2, ... Colour 0 is rejected.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<Color> assignment);

    std::size_t size() const noexcept { return assignment_.size(); }
    Color operator[](VertexId v) const { return assignment_.at(v); }
    std::span<const Color> assignment() const noexcept { return assignment_; }

    /// Number of distinct colours in use, i.e. non-empty colour classes.
    std::size_t color_count() const noexcept { return color_count_; }
    Color max_color() const noexcept;

    /// Colours relabelled 1..k in order of first appearance.
    bool is_normalized() const noexcept;

    bool operator==(const Coloring&) const = default;

private:
    std::vector<Color> assignment_;
    std::size_t color_count_ = 0;
};

/// Relabels colours by first appearance, closing gaps. Idempotent.
Coloring normalize(const Coloring& c);

/// Throws std::invalid_argument when c is not sized for g.
bool is_proper(const Graph& g, const Coloring& c);

/// Smallest colour whose (non-empty) class lies inside N(v). A vertex's own
/// class never qualifies since v is not its own neighbour. Throws
/// std::invalid_argument if c is improper or mis-sized, std::out_of_range
/// for a bad vertex.
std::optional<Color> dominated_class_witness(const Graph& g, const Coloring& c, VertexId v);

/// Proper, and every vertex is adjacent to all of some colour class.
/// Always false on graphs with an isolated vertex.
bool is_td_coloring(const Graph& g, const Coloring& c);

} // namespace tdc
