#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdc/coloring.hpp"
#include "tdc/family_spec.hpp"
#include "tdc/formulas.hpp"
#include "tdc/graph.hpp"
#include "tdc/solvers.hpp"

namespace tdc {

inline constexpr int kRecordSchemaVersion = 1;

// Process exit codes shared by the harness and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInconsistent = 2;
inline constexpr int kExitRefuted = 3;
inline constexpr int kExitBudget = 4;

/// The artifact contradicted itself: solver and oracle disagree, a witness
/// failed its checker, or a solved value left the gamma_t/chi sandwich.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Everything computed for one labelled graph. This is what the cache
/// stores, keyed by canonical_key plus solver version and budgets.
struct SolveOutcome {
    std::string graph_key;
    std::size_t vertex_count = 0;
    std::optional<std::uint32_t> td_value;
    std::vector<Color> witness;
    std::uint64_t nodes_explored = 0;
    double elapsed = 0.0;  // seconds
    std::uint32_t lower_bound_used = 0;
    std::uint32_t upper_bound_used = 0;
    std::optional<std::uint32_t> chromatic_number;
    std::vector<Color> chromatic_witness;
    std::optional<std::uint32_t> total_domination_number;
    std::vector<VertexId> total_dominating_set;
    std::optional<std::uint32_t> oracle_value;
};

struct HarnessOptions {
    SolveOptions solve{std::uint64_t{100'000'000}, std::nullopt};
    std::size_t oracle_cap = 10;
    unsigned jobs = 0;  // 0: hardware concurrency
};

/// Runs the exact solvers (and the oracle under the cap) on g and
/// cross-checks everything. Throws InconsistencyError on any disagreement.
SolveOutcome solve_graph(const Graph& g, const HarnessOptions& opts);

/// Persistent JSONL cache of SolveOutcome values under a directory.
class SolveCache {
public:
    explicit SolveCache(std::filesystem::path dir);

    std::optional<SolveOutcome> find(const std::string& cache_key) const;
    /// Appends one line and flushes; serialised across threads.
    void store(const std::string& cache_key, const SolveOutcome& outcome);
    std::size_t size() const;
    std::size_t hits() const noexcept { return hits_; }

    static std::string key_for(const Graph& g, const HarnessOptions& opts);

private:
    std::filesystem::path file_;
    mutable std::mutex mutex_;
    std::map<std::string, SolveOutcome> entries_;
    mutable std::size_t hits_ = 0;
};

enum class Match { confirmed, refuted, unknown };
const char* to_string(Match m);

struct VerificationRecord {
    std::string spec_text;
    std::size_t vertex_count = 0;
    std::optional<std::uint32_t> formula_value;
    std::string theorem_tag;
    std::optional<std::uint32_t> solver_value;
    std::optional<std::uint32_t> oracle_value;
    Match match = Match::unknown;
    double elapsed = 0.0;

    std::string graph_key;
    std::vector<Color> witness;
    std::uint64_t nodes_explored = 0;
    std::optional<std::uint32_t> chromatic_number;
    std::optional<std::uint32_t> total_domination_number;
    /// Set for bound-only theorems; the record stays `unknown` and
    /// bound_holds says whether the solver value respects the bound.
    std::optional<std::uint32_t> upper_bound;
    std::optional<bool> bound_holds;
    bool extension = false;
};

/// Memoising front end used by verify_instance and run_suite.
class Verifier {
public:
    explicit Verifier(HarnessOptions opts, SolveCache* cache = nullptr);

    const SolveOutcome& outcome(const Graph& g);
    VerificationRecord verify(const FamilySpec& spec);

    /// Solves (or fetches) many graphs on the worker pool, in order.
    void prefetch(const std::vector<Graph>& graphs);

    const HarnessOptions& options() const noexcept { return opts_; }

private:
    SolveOutcome compute(const Graph& g);

    HarnessOptions opts_;
    SolveCache* cache_;
    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const SolveOutcome>> memo_;
};

VerificationRecord verify_instance(const FamilySpec& spec, const SolveOptions& opts = HarnessOptions{}.solve);

struct SharpnessRow {
    std::string spec_text;
    std::optional<std::uint32_t> value;  // absent on budget exhaustion
    std::uint32_t bound = 0;             // |V(G)| + |V(H)|
    bool sharp = false;
};

/// Exact values of corona(C(4),K(2)) and corona(K(2),K(3)) against the
/// |V(G)|+|V(H)| bound, plus corona(P(2),K(1)) as a consistency row.
std::vector<SharpnessRow> sharpness_check(Verifier& verifier);

struct SuiteConfig {
    std::vector<std::string> instances;
    HarnessOptions options;
};

SuiteConfig default_suite();

/// JSON suite file: {"instances": [...], "ranges": [{"template": "P({n})",
/// "n": [lo, hi]}, ...], "node_budget", "time_budget_ms", "oracle_cap",
/// "jobs", "include_default"}. Throws std::runtime_error on bad input.
SuiteConfig load_suite(const std::filesystem::path& file);
SuiteConfig parse_suite(const std::string& json_text);

struct SuiteReport {
    std::vector<VerificationRecord> records;  // sorted by spec_text
    std::vector<SharpnessRow> sharpness;
    HarnessOptions options;

    std::size_t count(Match m) const;
    std::size_t budget_exhausted() const;
    std::size_t bound_violations() const;
    int exit_code() const;
};

SuiteReport run_suite(const SuiteConfig& config, SolveCache* cache = nullptr);

/// Natural order: digit runs compare numerically, so P(2) < P(10).
bool natural_less(const std::string& a, const std::string& b);

std::string record_to_json(const VerificationRecord& r);
std::string to_jsonl(const std::vector<VerificationRecord>& records);
/// Timing-free text table grouped by theorem tag.
std::string render_table(const SuiteReport& report);
std::string render_csv(const SuiteReport& report);

} // namespace tdc
