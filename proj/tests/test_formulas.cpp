#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tdc/expr.hpp"
#include "tdc/families.hpp"
#include "tdc/formulas.hpp"

using namespace tdc;

TEST_CASE("formula_path") {
    CHECK(formula_path(7).value == 5);
    CHECK(formula_path(6).value == 4);
    CHECK(formula_path(2).value == 2);
    CHECK(formula_path(4).value == 3);
    CHECK(formula_path(7).kind == FormulaKind::exact);
    CHECK(formula_path(7).theorem_tag == tags::path);
    CHECK_THROWS_AS(formula_path(1), std::invalid_argument);
}

TEST_CASE("formula_cycle") {
    CHECK(formula_cycle(6).value == 4);
    CHECK(formula_cycle(9).value == 6);
    CHECK(formula_cycle(5).value == 4);
    CHECK(formula_cycle(12).value == 8);
    CHECK_FALSE(formula_cycle(6).extension);
    const auto c4 = formula_cycle(4);
    CHECK(c4.value == 2);
    CHECK(c4.extension);
    CHECK(c4.theorem_tag == tags::cycle_extension);
    CHECK(formula_cycle(3).value == 3);
    CHECK(formula_cycle(3).extension);
    CHECK_THROWS_AS(formula_cycle(2), std::invalid_argument);
}

TEST_CASE("formula_corona") {
    CHECK(formula_corona(CoronaCase::path_k1, 5).value == 6);
    CHECK(formula_corona(CoronaCase::cycle_k1, 3).value == 4);
    CHECK(formula_corona(CoronaCase::path_empty, 3, 2).value == 4);
    CHECK(formula_corona(friendship_family(3, 2)).value == 6);
    CHECK(formula_corona(friendship_family(3, 2)).theorem_tag == tags::corona_k1);
    CHECK_THROWS_AS(formula_corona(CoronaCase::path_k1, 1), std::invalid_argument);
    CHECK_THROWS_AS(formula_corona(CoronaCase::cycle_k1, 2), std::invalid_argument);
    CHECK_THROWS_AS(formula_corona(CoronaCase::path_empty, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(formula_corona(empty_graph(3)), std::invalid_argument);
}

TEST_CASE("corona_upper_bounds") {
    const auto a = corona_upper_bounds(2, 4, 2, 2);
    CHECK(a.kind == FormulaKind::upper_bound);
    CHECK(a.bounds == std::vector<std::uint32_t>{10, 6});
    CHECK(a.value == 6);
    const auto b = corona_upper_bounds(2, 2, 3, 3);
    CHECK(b.bounds == std::vector<std::uint32_t>{8, 5});
    CHECK(b.value == 5);
    CHECK(corona_upper_bounds(2, 2, 2, 2).value == 4);
}

TEST_CASE("formula_join") {
    CHECK(formula_join(2, 2).value == 4);
    CHECK(formula_join(3, 2).value == 5);
    CHECK(formula_join(3, 2).theorem_tag == tags::join);
}

TEST_CASE("formula_friendship") {
    CHECK(formula_friendship(3, 5).value == 3);
    CHECK(formula_friendship(4, 3).value == 5);
    CHECK(formula_friendship(5, 2).value == 6);
    CHECK(formula_friendship(4, 3).theorem_tag == tags::flower_d4);
    CHECK_THROWS_AS(formula_friendship(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(formula_friendship(3, 1), std::invalid_argument);
}

TEST_CASE("formula_ladder and formula_grid") {
    CHECK(formula_ladder(5).value == 6);
    CHECK(formula_ladder(6).value == 6);
    CHECK(formula_ladder(2).value == 2);
    CHECK_THROWS_AS(formula_ladder(1), std::invalid_argument);
    CHECK(formula_grid(4, 4).value == 8);
    CHECK(formula_grid(5, 4).value == 11);
    CHECK(formula_grid(3, 3).value == 6);
    CHECK(formula_grid(3, 3).theorem_tag == tags::grid);
    CHECK_THROWS_AS(formula_grid(1, 4), std::invalid_argument);
    for (std::uint32_t n = 2; n <= 40; ++n) CHECK(formula_ladder(n).value == formula_grid(2, n).value);
}

TEST_CASE("grid odd by odd reduces to one even by even step") {
    for (std::uint32_t m = 3; m <= 15; m += 2)
        for (std::uint32_t n = 3; n <= 15; n += 2)
            CHECK(formula_grid(m, n).value == formula_grid(m - 1, n - 1).value + formula_path(m + n - 1).value);
}

TEST_CASE("formula_chain_cactus") {
    CHECK(formula_chain_cactus(ChainKind::triangular, 4).value == 5);
    CHECK(formula_chain_cactus(ChainKind::triangular, 7).value == 9);
    CHECK(formula_chain_cactus(ChainKind::ortho, 1).value == 2);
    CHECK(formula_chain_cactus(ChainKind::ortho, 3).value == 6);
    CHECK_THROWS_AS(formula_chain_cactus(ChainKind::ortho, 0), std::invalid_argument);
}

TEST_CASE("henning_bounds") {
    const auto c6 = henning_bounds(cycle_graph(6));
    CHECK(c6.kind == FormulaKind::interval);
    CHECK(c6.lo == 4);
    CHECK(c6.hi == 6);
    const auto k4 = henning_bounds(complete_graph(4));
    CHECK(k4.lo == 4);
    CHECK(k4.hi == 6);
    const auto p2 = henning_bounds(path_graph(2));
    CHECK(p2.lo == 2);
    CHECK(p2.hi == 4);
    CHECK_THROWS_AS(henning_bounds(empty_graph(2)), std::invalid_argument);
    CHECK_THROWS_AS(henning_bounds(grid(5, 5), SolveOptions{std::uint64_t{1}, std::nullopt}), std::runtime_error);
}

TEST_CASE("property: path and cycle formulas are non-decreasing") {
    for (std::uint32_t n = 2; n < 200; ++n) {
        const auto a = formula_path(n).value, b = formula_path(n + 1).value;
        CHECK(a <= b);
        CHECK(b - a <= 2);
    }
    for (std::uint32_t n = 5; n < 200; ++n) {
        const auto a = formula_cycle(n).value, b = formula_cycle(n + 1).value;
        CHECK(a <= b);
        CHECK(b - a <= 2);
    }
}

TEST_CASE("match_formula") {
    auto tag_of = [](const char* text) {
        const auto f = match_formula(parse_expr(text));
        return f ? f->theorem_tag : std::string("none");
    };
    CHECK(tag_of("P(7)") == tags::path);
    CHECK(tag_of("C(9)") == tags::cycle);
    CHECK(tag_of("C(4)") == tags::cycle_extension);
    CHECK(tag_of("F(3)") == tags::friendship);
    CHECK(tag_of("D(4,2)") == tags::flower_d4);
    CHECK(tag_of("D(5,2)") == tags::flower_d5);
    CHECK(tag_of("L(4)") == tags::ladder);
    CHECK(tag_of("cart(P(2),P(4))") == tags::ladder);
    CHECK(tag_of("G(3,4)") == tags::grid);
    CHECK(tag_of("cart(P(3),P(4))") == tags::grid);
    CHECK(tag_of("T(3)") == tags::tri_chain);
    CHECK(tag_of("O(2)") == tags::ortho_chain);
    CHECK(tag_of("corona(P(3),K(1))") == tags::path_corona_k1);
    CHECK(tag_of("corona(C(4),K(1))") == tags::cycle_corona_k1);
    CHECK(tag_of("corona(P(3),E(2))") == tags::path_corona_empty);
    CHECK(tag_of("corona(K(4),K(1))") == tags::corona_k1);
    CHECK(tag_of("corona(C(4),K(2))") == tags::corona_sharp);
    CHECK(match_formula(parse_expr("corona(C(4),K(2))"))->value == 6);
    CHECK(tag_of("D(6,2)") == "none");
    CHECK(tag_of("K(4)") == "none");
    CHECK(tag_of("E(3)") == "none");
    CHECK(tag_of("cart(C(4),P(2))") == "none");

    // Operand-dependent theorems need component values.
    CHECK(tag_of("join(P(3),P(3))") == "none");
    const ComponentValue fake = [](const FamilySpec& s) -> std::optional<std::uint32_t> {
        return s.to_string() == "P(3)" ? std::optional<std::uint32_t>(2) : std::optional<std::uint32_t>(3);
    };
    const auto j = match_formula(parse_expr("join(P(3),P(3))"), fake);
    REQUIRE(j.has_value());
    CHECK(j->value == 4);
    CHECK(j->theorem_tag == tags::join);
    const auto cb = match_formula(parse_expr("corona(P(3),C(5))"), fake);
    REQUIRE(cb.has_value());
    CHECK(cb->kind == FormulaKind::upper_bound);
    CHECK(cb->bounds == std::vector<std::uint32_t>{2 + 3 * 3, 8});
    CHECK(cb->value == 8);
}
