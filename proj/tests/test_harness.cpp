#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>

#include "json.hpp"
#include "tdc/expr.hpp"
#include "tdc/families.hpp"
#include "tdc/harness.hpp"
#include "tdc/kernels.hpp"

using namespace tdc;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("tdc-harness-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

// Accepts every colour class as dominating; used to provoke a solver/oracle
// disagreement.
bool always_covered(std::span<const std::uint64_t>, std::span<const std::uint64_t>) { return true; }

} // namespace

TEST_CASE("verify_instance examples") {
    const auto p7 = verify_instance(parse_expr("P(7)"));
    CHECK(p7.formula_value == 5u);
    CHECK(p7.solver_value == 5u);
    CHECK(p7.oracle_value == 5u);
    CHECK(p7.match == Match::confirmed);
    CHECK(p7.theorem_tag == tags::path);
    CHECK(p7.vertex_count == 7);
    CHECK(is_td_coloring(path_graph(7), Coloring(p7.witness)));

    const auto f2 = verify_instance(parse_expr("F(2)"));
    CHECK(f2.formula_value == 3u);
    CHECK(f2.solver_value == 3u);
    CHECK(f2.match == Match::confirmed);

    const auto g33 = verify_instance(parse_expr("G(3,3)"));
    CHECK(g33.formula_value == 6u);
    REQUIRE(g33.solver_value.has_value());
    CHECK(g33.oracle_value == g33.solver_value);
    CHECK(g33.match == (*g33.solver_value == 6 ? Match::confirmed : Match::refuted));
    CHECK(is_td_coloring(grid(3, 3), Coloring(g33.witness)));

    const auto k4 = verify_instance(parse_expr("K(4)"));
    CHECK_FALSE(k4.formula_value.has_value());
    CHECK(k4.match == Match::unknown);
    CHECK(k4.solver_value == 4u);
}

TEST_CASE("bound-only records stay unknown") {
    const auto r = verify_instance(parse_expr("corona(P(3),C(5))"));
    CHECK(r.theorem_tag == tags::corona_bounds);
    CHECK(r.match == Match::unknown);
    REQUIRE(r.upper_bound.has_value());
    CHECK(r.bound_holds == true);
}

TEST_CASE("solver and oracle disagreement is fatal") {
    const kernels::KernelTable& saved = kernels::active();
    static kernels::KernelTable broken;
    broken = kernels::scalar_table();
    broken.isa = "broken";
    broken.all_covered = &always_covered;
    kernels::set_active(broken);
    HarnessOptions opts;
    CHECK_THROWS_AS(solve_graph(cycle_graph(6), opts), InconsistencyError);
    kernels::set_active(saved);
    CHECK_NOTHROW(solve_graph(cycle_graph(6), opts));
}

TEST_CASE("tiny budget gives unknown and exit 4") {
    SuiteConfig c;
    c.instances = {"G(4,4)", "P(3)"};
    c.options.solve.node_budget = 10;
    const auto report = run_suite(c);
    REQUIRE(report.records.size() == 2);
    const auto& g44 = report.records[0];
    CHECK(g44.spec_text == "G(4,4)");
    CHECK_FALSE(g44.solver_value.has_value());
    CHECK(g44.match == Match::unknown);
    CHECK(report.budget_exhausted() == 1);
    CHECK(report.exit_code() == kExitBudget);
    REQUIRE(report.sharpness.size() == 3);
    CHECK_FALSE(report.sharpness[0].value.has_value());
    CHECK_FALSE(report.sharpness[0].sharp);
    CHECK(render_table(report).find("G(4,4)") != std::string::npos);
}

TEST_CASE("exit codes") {
    SuiteReport r;
    CHECK(r.exit_code() == kExitOk);
    VerificationRecord unknown;
    r.records.push_back(unknown);
    CHECK(r.exit_code() == kExitBudget);
    VerificationRecord refuted;
    refuted.solver_value = 3;
    refuted.formula_value = 4;
    refuted.match = Match::refuted;
    r.records.push_back(refuted);
    CHECK(r.exit_code() == kExitRefuted);
}

TEST_CASE("warm cache reproduces the cold run") {
    TempDir dir;
    SuiteConfig c;
    c.instances = {"P(10)", "C(5)", "P(2)", "join(P(3),K(3))", "corona(P(2),E(2))", "T(2)"};
    c.options.jobs = 2;
    std::string cold_jsonl, cold_table;
    {
        SolveCache cache(dir.path);
        const auto report = run_suite(c, &cache);
        cold_jsonl = to_jsonl(report.records);
        cold_table = render_table(report);
        CHECK(cache.hits() == 0);
        CHECK(cache.size() > 0);
    }
    SolveCache cache(dir.path);
    const auto warm = run_suite(c, &cache);
    CHECK(cache.hits() > 0);
    CHECK(to_jsonl(warm.records) == cold_jsonl);
    CHECK(render_table(warm) == cold_table);

    // A torn trailing line is ignored.
    std::ofstream(dir.path / "solve-cache.jsonl", std::ios::app) << "{\"cache_key\": \"x";
    SolveCache again(dir.path);
    CHECK(again.size() == cache.size());
}

TEST_CASE("cache keys include budgets and version") {
    HarnessOptions a, b;
    b.solve.node_budget = 5;
    const auto g = path_graph(4);
    CHECK(SolveCache::key_for(g, a) != SolveCache::key_for(g, b));
    CHECK(SolveCache::key_for(g, a).find(kSolverVersion) != std::string::npos);
    CHECK(SolveCache::key_for(g, a).find(canonical_key(g)) != std::string::npos);
}

TEST_CASE("records are sorted and deterministic") {
    SuiteConfig c;
    c.instances = {"P(10)", "P(9)", "P(2)", "C(3)", "P(9)"};
    const auto a = run_suite(c);
    REQUIRE(a.records.size() == 4);
    CHECK(a.records[0].spec_text == "C(3)");
    CHECK(a.records[1].spec_text == "P(2)");
    CHECK(a.records[2].spec_text == "P(9)");
    CHECK(a.records[3].spec_text == "P(10)");
    c.options.jobs = 3;
    const auto b = run_suite(c);
    REQUIRE(b.records.size() == a.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        auto x = nlohmann::json::parse(record_to_json(a.records[i]));
        auto y = nlohmann::json::parse(record_to_json(b.records[i]));
        x.erase("elapsed");
        y.erase("elapsed");
        CHECK(x == y);
    }
    CHECK(render_table(b) == render_table(a));
    CHECK(render_table(a).find("elapsed") == std::string::npos);
    CHECK(render_csv(a).find("spec_text") != std::string::npos);
}

TEST_CASE("record JSON fields") {
    const auto r = verify_instance(parse_expr("P(4)"));
    const auto j = nlohmann::json::parse(record_to_json(r));
    for (const char* key : {"spec_text", "vertex_count", "formula_value", "theorem_tag", "solver_value",
                            "oracle_value", "match", "elapsed"})
        CHECK(j.contains(key));
    CHECK(j["match"] == "confirmed");
    CHECK(j["solver_value"] == 3);
}

TEST_CASE("parse_suite") {
    const auto c = parse_suite(R"js({"instances": ["K(3)"],
        "ranges": [{"template": "G({m},{n})", "m": [2, 3], "n": [2, 4]}],
        "node_budget": 1000, "oracle_cap": 8, "jobs": 2})js");
    CHECK(c.instances.size() == 7);
    CHECK(c.instances.front() == "K(3)");
    CHECK(std::find(c.instances.begin(), c.instances.end(), "G(3,4)") != c.instances.end());
    CHECK(c.options.solve.node_budget == 1000u);
    CHECK(c.options.oracle_cap == 8);
    CHECK(c.options.jobs == 2);
    CHECK(parse_suite(R"js({"include_default": true})js").instances.size() == default_suite().instances.size());

    CHECK_THROWS_AS(parse_suite("not json"), std::runtime_error);
    CHECK_THROWS_AS(parse_suite("{}"), std::runtime_error);
    CHECK_THROWS_AS(parse_suite(R"js({"ranges": [{"template": "P({n})", "n": [5, 2]}]})js"), std::runtime_error);
    CHECK_THROWS_AS(parse_suite(R"js({"instances": ["P(3)"], "oracle_cap": 0})js"), std::runtime_error);
    CHECK_THROWS_AS(parse_suite(R"js({"instances": ["P(3)"], "node_budget": -1})js"), std::runtime_error);
    CHECK_THROWS_AS(load_suite("/nonexistent/suite.json"), std::runtime_error);
}

TEST_CASE("natural_less") {
    CHECK(natural_less("P(2)", "P(10)"));
    CHECK_FALSE(natural_less("P(10)", "P(2)"));
    CHECK(natural_less("G(3,3)", "G(3,4)"));
    CHECK(natural_less("C(12)", "P(2)"));
    CHECK_FALSE(natural_less("P(2)", "P(2)"));
    CHECK(natural_less("P", "P(1)"));
}

TEST_CASE("sharpness rows") {
    Verifier v(HarnessOptions{});
    const auto rows = sharpness_check(v);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].spec_text == "corona(C(4),K(2))");
    CHECK(rows[0].value == 6u);
    CHECK(rows[0].bound == 6);
    CHECK(rows[0].sharp);
    CHECK(rows[1].value == 5u);
    CHECK(rows[1].sharp);
    CHECK(rows[2].value == 3u);
    CHECK(rows[2].bound == 3);
}
