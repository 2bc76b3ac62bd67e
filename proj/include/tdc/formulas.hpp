#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tdc/families.hpp"
#include "tdc/family_spec.hpp"
#include "tdc/graph.hpp"
#include "tdc/solvers.hpp"

namespace tdc {

enum class FormulaKind { exact, upper_bound, interval };

/// Closed-form value of chi_d^t for a family, or a bound on it.
///
/// exact:       value == lo == hi.
/// upper_bound: value == hi is the tightest bound; `bounds` lists each bound
///              the theorem supplies, lo is 0.
/// interval:    lo <= hi, value == lo.
///
/// `extension` marks values outside a theorem's stated domain that were
/// established by exhaustive search rather than taken from the theorem.
struct FormulaResult {
    FormulaKind kind = FormulaKind::exact;
    std::uint32_t value = 0;
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;
    std::string theorem_tag;
    std::vector<std::uint32_t> bounds;
    bool extension = false;

    static FormulaResult exact(std::uint32_t v, std::string tag, bool extension = false);
    static FormulaResult interval(std::uint32_t lo, std::uint32_t hi, std::string tag);
};

// Theorem tags as they appear in reports.
namespace tags {
inline constexpr const char* path = "path-theorem";
inline constexpr const char* cycle = "cycle-theorem";
inline constexpr const char* cycle_extension = "cycle-extension";
inline constexpr const char* path_corona_k1 = "path-corona-k1-theorem";
inline constexpr const char* cycle_corona_k1 = "cycle-corona-k1-theorem";
inline constexpr const char* path_corona_empty = "path-corona-empty-theorem";
inline constexpr const char* corona_k1 = "corona-k1-theorem";
inline constexpr const char* corona_bounds = "corona-upper-bounds";
inline constexpr const char* corona_sharp = "corona-sharpness";
inline constexpr const char* join = "join-theorem";
inline constexpr const char* friendship = "friendship-theorem";
inline constexpr const char* flower_d4 = "flower-d4-theorem";
inline constexpr const char* flower_d5 = "flower-d5-theorem";
inline constexpr const char* ladder = "ladder-theorem";
inline constexpr const char* grid = "grid-theorem";
inline constexpr const char* tri_chain = "triangular-chain-theorem";
inline constexpr const char* ortho_chain = "ortho-chain-theorem";
inline constexpr const char* henning = "henning-bounds";
} // namespace tags

// Every evaluator below throws std::invalid_argument outside its domain.

/// n >= 2: 2*ceil(n/3) - 1 when n = 1 (mod 3), otherwise 2*ceil(n/3).
FormulaResult formula_path(std::uint32_t n);

/// n >= 5: with r = n mod 6, 4*floor(n/6) + r for r in {0,1,2,4} and
/// 4*floor(n/6) + r - 1 for r in {3,5}. n = 3 and n = 4 return 3 and 2
/// flagged as extensions.
FormulaResult formula_cycle(std::uint32_t n);

enum class CoronaCase { path_k1, cycle_k1, path_empty };

/// All cases give n + 1 for a left factor on n vertices. path_k1: n >= 2;
/// cycle_k1: n >= 3; path_empty: n >= 2 and m >= 1.
FormulaResult formula_corona(CoronaCase which, std::uint32_t n, std::uint32_t m = 1);

/// G o K_1 for connected G: |V(G)| + 1.
FormulaResult formula_corona(const Graph& g);

/// min(chi_dt_g + n_g * chi_dt_h, n_g + n_h); both bounds kept in `bounds`.
FormulaResult corona_upper_bounds(std::uint32_t chi_dt_g, std::uint32_t n_g, std::uint32_t chi_dt_h,
                                  std::uint32_t n_h);

FormulaResult formula_join(std::uint32_t chi_dt_g, std::uint32_t chi_dt_h);

/// q = 3: 3. q = 4: n + 2. q = 5: 2n + 2. Requires n >= 2.
FormulaResult formula_friendship(std::uint32_t q, std::uint32_t n);

/// n >= 2: n + 1 for odd n, n for even n.
FormulaResult formula_ladder(std::uint32_t n);

/// Grid with m rows and n columns (m, n >= 2), by parity:
///   m = 2k,   n = 2s:   k * ladder(n)
///   m = 2k+1, n = 2s:   k * ladder(n) + path(n)
///   m = 2k,   n = 2s+1: s * ladder(m) + path(m)
///   m = 2k+1, n = 2s+1: grid(m-1, n-1) + path(m+n-1)
FormulaResult formula_grid(std::uint32_t m, std::uint32_t n);

/// triangular: 2*ceil(n/2) + 1. ortho: 2n. Requires n >= 1.
FormulaResult formula_chain_cactus(ChainKind kind, std::uint32_t n);

/// [max(gamma_t, chi), gamma_t + chi] from the exact sub-solvers. Throws
/// std::invalid_argument with an isolated vertex and std::runtime_error if
/// a sub-solve runs out of budget.
FormulaResult henning_bounds(const Graph& g, const SolveOptions& opts = {});

/// Supplies solver values of chi_d^t for operands of join/corona; nullopt
/// when unavailable.
using ComponentValue = std::function<std::optional<std::uint32_t>(const FamilySpec&)>;

/// The theorem that applies to `spec`, evaluated. nullopt when no theorem
/// covers the expression (callers must not guess).
std::optional<FormulaResult> match_formula(const FamilySpec& spec, const ComponentValue& component = {});

} // namespace tdc
