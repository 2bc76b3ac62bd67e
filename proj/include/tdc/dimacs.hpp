#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tdc/graph.hpp"

namespace tdc {

class DimacsError : public std::runtime_error {
public:
    DimacsError(std::size_t line, const std::string& what)
        : std::runtime_error("dimacs line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// DIMACS .col text: `p edge n m` then one `e u v` line per edge, 1-based,
/// sorted with u < v. Comments are never emitted.
std::string to_dimacs(const Graph& g);

/// Parses DIMACS .col text. Lines starting with `c` and blank lines are
/// skipped. The declared edge count must match the number of `e` lines.
Graph from_dimacs(std::string_view text);

} // namespace tdc
