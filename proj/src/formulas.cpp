#include "tdc/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdc {

FormulaResult FormulaResult::exact(std::uint32_t v, std::string tag, bool extension) {
    FormulaResult r;
    r.kind = FormulaKind::exact;
    r.value = r.lo = r.hi = v;
    r.theorem_tag = std::move(tag);
    r.extension = extension;
    return r;
}

FormulaResult FormulaResult::interval(std::uint32_t lo, std::uint32_t hi, std::string tag) {
    if (lo > hi) throw std::logic_error("empty interval");
    FormulaResult r;
    r.kind = FormulaKind::interval;
    r.value = r.lo = lo;
    r.hi = hi;
    r.theorem_tag = std::move(tag);
    return r;
}

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw std::invalid_argument(message);
}

std::uint32_t ceil_div(std::uint32_t a, std::uint32_t b) { return (a + b - 1) / b; }

} // namespace

FormulaResult formula_path(std::uint32_t n) {
    require(n >= 2, "path formula needs n >= 2");
    const std::uint32_t base = 2 * ceil_div(n, 3);
    return FormulaResult::exact(n % 3 == 1 ? base - 1 : base, tags::path);
}

FormulaResult formula_cycle(std::uint32_t n) {
    require(n >= 3, "cycle formula needs n >= 3");
    if (n == 3) return FormulaResult::exact(3, tags::cycle_extension, true);
    if (n == 4) return FormulaResult::exact(2, tags::cycle_extension, true);
    const std::uint32_t r = n % 6;
    const std::uint32_t base = 4 * (n / 6) + r;
    return FormulaResult::exact(r == 3 || r == 5 ? base - 1 : base, tags::cycle);
}

FormulaResult formula_corona(CoronaCase which, std::uint32_t n, std::uint32_t m) {
    switch (which) {
    case CoronaCase::path_k1:
        require(n >= 2, "P_n o K_1 formula needs n >= 2");
        return FormulaResult::exact(n + 1, tags::path_corona_k1);
    case CoronaCase::cycle_k1:
        require(n >= 3, "C_n o K_1 formula needs n >= 3");
        return FormulaResult::exact(n + 1, tags::cycle_corona_k1);
    case CoronaCase::path_empty:
        require(n >= 2, "P_n o E_m formula needs n >= 2");
        require(m >= 1, "P_n o E_m formula needs m >= 1");
        return FormulaResult::exact(n + 1, tags::path_corona_empty);
    }
    throw std::logic_error("unhandled corona case");
}

FormulaResult formula_corona(const Graph& g) {
    require(g.vertex_count() >= 1, "G o K_1 formula needs a non-empty G");
    require(g.is_connected(), "G o K_1 formula needs a connected G");
    return FormulaResult::exact(static_cast<std::uint32_t>(g.vertex_count()) + 1, tags::corona_k1);
}

FormulaResult corona_upper_bounds(std::uint32_t chi_dt_g, std::uint32_t n_g, std::uint32_t chi_dt_h,
                                  std::uint32_t n_h) {
    require(chi_dt_g >= 1 && n_g >= 1 && chi_dt_h >= 1 && n_h >= 1, "corona bounds need positive inputs");
    FormulaResult r;
    r.kind = FormulaKind::upper_bound;
    r.bounds = {chi_dt_g + n_g * chi_dt_h, n_g + n_h};
    r.value = r.hi = std::min(r.bounds[0], r.bounds[1]);
    r.lo = 0;
    r.theorem_tag = tags::corona_bounds;
    return r;
}

FormulaResult formula_join(std::uint32_t chi_dt_g, std::uint32_t chi_dt_h) {
    return FormulaResult::exact(chi_dt_g + chi_dt_h, tags::join);
}

FormulaResult formula_friendship(std::uint32_t q, std::uint32_t n) {
    require(n >= 2, "friendship formulas need n >= 2");
    switch (q) {
    case 3: return FormulaResult::exact(3, tags::friendship);
    case 4: return FormulaResult::exact(n + 2, tags::flower_d4);
    case 5: return FormulaResult::exact(2 * n + 2, tags::flower_d5);
    default: throw std::invalid_argument("no friendship formula for cycle length " + std::to_string(q));
    }
}

FormulaResult formula_ladder(std::uint32_t n) {
    require(n >= 2, "ladder formula needs n >= 2");
    return FormulaResult::exact(n % 2 == 1 ? n + 1 : n, tags::ladder);
}

FormulaResult formula_grid(std::uint32_t m, std::uint32_t n) {
    require(m >= 2 && n >= 2, "grid formula needs m, n >= 2");
    const bool m_even = m % 2 == 0;
    const bool n_even = n % 2 == 0;
    std::uint32_t value = 0;
    if (m_even && n_even) {
        value = (m / 2) * formula_ladder(n).value;
    } else if (!m_even && n_even) {
        value = (m / 2) * formula_ladder(n).value + formula_path(n).value;
    } else if (m_even && !n_even) {
        value = (n / 2) * formula_ladder(m).value + formula_path(m).value;
    } else {
        value = formula_grid(m - 1, n - 1).value + formula_path(m + n - 1).value;
    }
    return FormulaResult::exact(value, tags::grid);
}

FormulaResult formula_chain_cactus(ChainKind kind, std::uint32_t n) {
    require(n >= 1, "chain formulas need n >= 1");
    if (kind == ChainKind::triangular) return FormulaResult::exact(2 * ceil_div(n, 2) + 1, tags::tri_chain);
    return FormulaResult::exact(2 * n, tags::ortho_chain);
}

FormulaResult henning_bounds(const Graph& g, const SolveOptions& opts) {
    if (g.has_isolated_vertex()) throw std::invalid_argument("bounds are undefined with an isolated vertex");
    const SolveResult gamma = total_domination_number(g, opts);
    const SolveResult chi = chromatic_number(g, opts);
    if (!gamma.solved() || !chi.solved()) throw std::runtime_error("budget exhausted computing bounds");
    return FormulaResult::interval(std::max(gamma.value, chi.value), gamma.value + chi.value, tags::henning);
}

namespace {

bool is_k1(const FamilySpec& s) {
    return (s.kind() == FamilyKind::complete || s.kind() == FamilyKind::empty) && s.first() == 1;
}

bool is_path(const FamilySpec& s, std::uint32_t min_n = 1) {
    return s.kind() == FamilyKind::path && s.first() >= min_n;
}

// Operand shape required by the join and general corona theorems.
bool connected_with_edges(const FamilySpec& s) {
    const Graph g = realize(s);
    return g.vertex_count() >= 2 && g.is_connected();
}

} // namespace

std::optional<FormulaResult> match_formula(const FamilySpec& spec, const ComponentValue& component) {
    const std::uint32_t a = spec.first();
    const std::uint32_t b = spec.second();
    switch (spec.kind()) {
    case FamilyKind::path:
        if (a >= 2) return formula_path(a);
        return std::nullopt;
    case FamilyKind::cycle:
        return formula_cycle(a);
    case FamilyKind::friendship:
        if (a >= 3 && a <= 5 && b >= 2) return formula_friendship(a, b);
        return std::nullopt;
    case FamilyKind::ladder:
        if (a >= 2) return formula_ladder(a);
        return std::nullopt;
    case FamilyKind::grid:
        if (a >= 2 && b >= 2) return formula_grid(a, b);
        return std::nullopt;
    case FamilyKind::tri_chain:
        return formula_chain_cactus(ChainKind::triangular, a);
    case FamilyKind::ortho_chain:
        return formula_chain_cactus(ChainKind::ortho, a);
    case FamilyKind::complete:
    case FamilyKind::empty:
        return std::nullopt;
    case FamilyKind::cart: {
        const auto& l = spec.left();
        const auto& r = spec.right();
        if (is_path(l, 2) && is_path(r, 2)) {
            if (l.first() == 2) return formula_ladder(r.first());
            return formula_grid(l.first(), r.first());
        }
        return std::nullopt;
    }
    case FamilyKind::corona: {
        const auto& l = spec.left();
        const auto& r = spec.right();
        if (r.kind() == FamilyKind::empty && r.first() >= 1 && is_path(l, 2)) {
            return formula_corona(CoronaCase::path_empty, l.first(), r.first());
        }
        if (is_k1(r)) {
            if (is_path(l, 2)) return formula_corona(CoronaCase::path_k1, l.first());
            if (l.kind() == FamilyKind::cycle) return formula_corona(CoronaCase::cycle_k1, l.first());
            const Graph g = realize(l);
            if (g.vertex_count() >= 1 && g.is_connected()) return formula_corona(g);
            return std::nullopt;
        }
        const bool sharp_pair =
            (l == FamilySpec::cycle(4) && r == FamilySpec::complete(2)) ||
            (l == FamilySpec::complete(2) && r == FamilySpec::complete(3));
        if (sharp_pair) {
            const auto nl = static_cast<std::uint32_t>(realize(l).vertex_count());
            const auto nr = static_cast<std::uint32_t>(realize(r).vertex_count());
            return FormulaResult::exact(nl + nr, tags::corona_sharp);
        }
        if (component && connected_with_edges(l) && connected_with_edges(r)) {
            const auto vl = component(l);
            const auto vr = component(r);
            if (!vl || !vr) return std::nullopt;
            return corona_upper_bounds(*vl, static_cast<std::uint32_t>(realize(l).vertex_count()), *vr,
                                       static_cast<std::uint32_t>(realize(r).vertex_count()));
        }
        return std::nullopt;
    }
    case FamilyKind::join: {
        if (!component) return std::nullopt;
        const auto& l = spec.left();
        const auto& r = spec.right();
        if (!connected_with_edges(l) || !connected_with_edges(r)) return std::nullopt;
        const auto vl = component(l);
        const auto vr = component(r);
        if (!vl || !vr) return std::nullopt;
        return formula_join(*vl, *vr);
    }
    }
    return std::nullopt;
}

} // namespace tdc
