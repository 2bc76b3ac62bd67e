#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tdc/family_spec.hpp"

namespace tdc {

/// Syntax or parameter-range error in a family expression. offset() is the
/// 0-based byte position the error refers to.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Parses a family expression:
///
///   expr := atom | op
///   atom := P(n) | C(n) | K(n) | E(n) | F(n) | D(q,n) | L(n) | G(m,n) | T(n) | O(n)
///   op   := corona(expr,expr) | join(expr,expr) | cart(expr,expr)
///
/// Heads are case-insensitive, whitespace is ignored, F(n) means D(3,n).
FamilySpec parse_expr(std::string_view text);

} // namespace tdc
