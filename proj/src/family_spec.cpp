#include "tdc/family_spec.hpp"

#include <stdexcept>

namespace tdc {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

} // namespace

FamilySpec FamilySpec::path(std::uint32_t n) {
    require(n >= 1, "path needs n >= 1");
    return {FamilyKind::path, n, 0};
}

FamilySpec FamilySpec::cycle(std::uint32_t n) {
    require(n >= 3, "cycle needs n >= 3");
    return {FamilyKind::cycle, n, 0};
}

FamilySpec FamilySpec::complete(std::uint32_t n) {
    require(n >= 1, "complete graph needs n >= 1");
    return {FamilyKind::complete, n, 0};
}

FamilySpec FamilySpec::empty(std::uint32_t n) { return {FamilyKind::empty, n, 0}; }

FamilySpec FamilySpec::friendship(std::uint32_t q, std::uint32_t blades) {
    require(q >= 3, "friendship family needs cycle length q >= 3");
    require(blades >= 1, "friendship family needs at least one blade");
    return {FamilyKind::friendship, q, blades};
}

FamilySpec FamilySpec::ladder(std::uint32_t n) {
    require(n >= 1, "ladder needs n >= 1");
    return {FamilyKind::ladder, n, 0};
}

FamilySpec FamilySpec::grid(std::uint32_t rows, std::uint32_t cols) {
    require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1");
    return {FamilyKind::grid, rows, cols};
}

FamilySpec FamilySpec::tri_chain(std::uint32_t n) {
    require(n >= 1, "triangular chain needs n >= 1");
    return {FamilyKind::tri_chain, n, 0};
}

FamilySpec FamilySpec::ortho_chain(std::uint32_t n) {
    require(n >= 1, "ortho chain needs n >= 1");
    return {FamilyKind::ortho_chain, n, 0};
}

FamilySpec FamilySpec::corona(FamilySpec left, FamilySpec right) {
    FamilySpec node{FamilyKind::corona, 0, 0};
    node.left_ = std::make_shared<const FamilySpec>(std::move(left));
    node.right_ = std::make_shared<const FamilySpec>(std::move(right));
    return node;
}

FamilySpec FamilySpec::join(FamilySpec left, FamilySpec right) {
    FamilySpec node{FamilyKind::join, 0, 0};
    node.left_ = std::make_shared<const FamilySpec>(std::move(left));
    node.right_ = std::make_shared<const FamilySpec>(std::move(right));
    return node;
}

FamilySpec FamilySpec::cart(FamilySpec left, FamilySpec right) {
    FamilySpec node{FamilyKind::cart, 0, 0};
    node.left_ = std::make_shared<const FamilySpec>(std::move(left));
    node.right_ = std::make_shared<const FamilySpec>(std::move(right));
    return node;
}

bool FamilySpec::is_product() const noexcept {
    return kind_ == FamilyKind::corona || kind_ == FamilyKind::join || kind_ == FamilyKind::cart;
}

const FamilySpec& FamilySpec::left() const {
    if (!left_) throw std::logic_error("atomic family has no operands");
    return *left_;
}

const FamilySpec& FamilySpec::right() const {
    if (!right_) throw std::logic_error("atomic family has no operands");
    return *right_;
}

std::string FamilySpec::to_string() const {
    auto one = [this](const char* head) { return std::string(head) + "(" + std::to_string(first_) + ")"; };
    auto two = [this](const char* head) {
        return std::string(head) + "(" + std::to_string(first_) + "," + std::to_string(second_) + ")";
    };
    auto op = [this](const char* head) {
        return std::string(head) + "(" + left_->to_string() + "," + right_->to_string() + ")";
    };
    switch (kind_) {
    case FamilyKind::path: return one("P");
    case FamilyKind::cycle: return one("C");
    case FamilyKind::complete: return one("K");
    case FamilyKind::empty: return one("E");
    case FamilyKind::friendship:
        if (first_ == 3) return "F(" + std::to_string(second_) + ")";
        return two("D");
    case FamilyKind::ladder: return one("L");
    case FamilyKind::grid: return two("G");
    case FamilyKind::tri_chain: return one("T");
    case FamilyKind::ortho_chain: return one("O");
    case FamilyKind::corona: return op("corona");
    case FamilyKind::join: return op("join");
    case FamilyKind::cart: return op("cart");
    }
    return {};
}

bool operator==(const FamilySpec& a, const FamilySpec& b) {
    if (a.kind_ != b.kind_ || a.first_ != b.first_ || a.second_ != b.second_) return false;
    if (!a.is_product()) return true;
    return *a.left_ == *b.left_ && *a.right_ == *b.right_;
}

} // namespace tdc
