// tdcolor: build family graphs, solve chi / gamma_t / chi_d^t exactly,
// evaluate closed forms, and run the verification suite.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tdc/dimacs.hpp"
#include "tdc/expr.hpp"
#include "tdc/families.hpp"
#include "tdc/formulas.hpp"
#include "tdc/harness.hpp"
#include "tdc/solvers.hpp"

using namespace tdc;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string join_colors(std::span<const Color> colors) {
    std::string s;
    for (Color c : colors) s += (s.empty() ? "" : " ") + std::to_string(c);
    return s;
}

ordered_json formula_json(const FormulaResult& f) {
    ordered_json j;
    j["kind"] = f.kind == FormulaKind::exact ? "exact" : f.kind == FormulaKind::upper_bound ? "upper_bound" : "interval";
    j["value"] = f.value;
    j["lo"] = f.lo;
    j["hi"] = f.hi;
    j["theorem_tag"] = f.theorem_tag;
    if (!f.bounds.empty()) j["bounds"] = f.bounds;
    j["extension"] = f.extension;
    return j;
}

int cmd_build(const std::string& expr, const std::string& out_format) {
    const Graph g = realize(parse_expr(expr));
    if (out_format == "json") {
        ordered_json j;
        j["spec_text"] = parse_expr(expr).to_string();
        j["vertex_count"] = g.vertex_count();
        j["edge_count"] = g.edge_count();
        j["edges"] = nlohmann::json::array();
        for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
        j["graph_key"] = canonical_key(g);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << to_dimacs(g);
    }
    return kExitOk;
}

int cmd_solve(const std::string& expr, const std::string& dimacs_file, const std::string& what,
              std::optional<std::uint64_t> budget, bool json) {
    const Graph g = dimacs_file.empty() ? realize(parse_expr(expr)) : from_dimacs(read_file(dimacs_file));
    SolveOptions opts;
    opts.node_budget = budget ? budget : HarnessOptions{}.solve.node_budget;

    SolveResult r;
    if (what == "chromatic") r = chromatic_number(g, opts);
    else if (what == "totaldom") r = total_domination_number(g, opts);
    else r = td_chromatic_number(g, opts);

    if (r.solved()) {
        const bool ok = what == "chromatic" ? is_proper(g, *r.coloring)
                        : what == "totaldom" ? is_total_dominating_set(g, *r.vertex_set)
                                             : is_td_coloring(g, *r.coloring);
        if (!ok) throw InconsistencyError("witness failed re-verification");
    }

    if (json) {
        ordered_json j;
        j["what"] = what;
        j["status"] = r.solved() ? "optimal" : "budget_exhausted";
        j["value"] = r.value;
        if (r.coloring) j["witness"] = std::vector<Color>(r.coloring->assignment().begin(), r.coloring->assignment().end());
        else if (r.vertex_set) j["witness"] = *r.vertex_set;
        else j["witness"] = nullptr;
        j["nodes_explored"] = r.nodes_explored;
        j["lower_bound_used"] = r.lower_bound_used;
        j["upper_bound_used"] = r.upper_bound_used;
        std::cout << j.dump() << "\n";
    } else if (r.solved()) {
        std::cout << what << " " << r.value << "\n";
        if (r.coloring) std::cout << "witness " << join_colors(r.coloring->assignment()) << "\n";
        if (r.vertex_set) {
            std::cout << "witness";
            for (VertexId v : *r.vertex_set) std::cout << " " << v;
            std::cout << "\n";
        }
        std::cout << "nodes " << r.nodes_explored << "\n";
    } else {
        std::cout << what << " unknown (budget exhausted), lower bound " << r.value << "\n";
    }
    return r.solved() ? kExitOk : kExitBudget;
}

int cmd_formula(const std::string& expr, bool json) {
    const FamilySpec spec = parse_expr(expr);
    HarnessOptions opts;
    opts.oracle_cap = 0;
    Verifier verifier(opts);
    const ComponentValue component = [&](const FamilySpec& s) -> std::optional<std::uint32_t> {
        const Graph h = realize(s);
        if (h.vertex_count() < 2 || h.has_isolated_vertex()) return std::nullopt;
        return verifier.outcome(h).td_value;
    };
    const auto f = match_formula(spec, component);
    if (json) {
        ordered_json j;
        j["spec_text"] = spec.to_string();
        j["formula"] = f ? formula_json(*f) : ordered_json(nullptr);
        std::cout << j.dump() << "\n";
        return kExitOk;
    }
    if (!f) {
        std::cout << "no formula applies to " << spec.to_string() << "\n";
        return kExitOk;
    }
    if (f->kind == FormulaKind::upper_bound) {
        std::cout << "<= " << f->value << " (" << f->theorem_tag << ", bounds";
        for (auto b : f->bounds) std::cout << " " << b;
        std::cout << ")\n";
    } else {
        std::cout << f->value << " (" << f->theorem_tag << (f->extension ? ", extension" : "") << ")\n";
    }
    return kExitOk;
}

int cmd_bounds(const std::string& expr, bool json) {
    const Graph g = realize(parse_expr(expr));
    const FormulaResult b = henning_bounds(g, HarnessOptions{}.solve);
    if (json) std::cout << formula_json(b).dump() << "\n";
    else std::cout << "[" << b.lo << ", " << b.hi << "]\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite_file, const std::string& cache_dir, const std::string& report_path,
               const std::string& records_path, const std::string& csv_path, std::optional<unsigned> jobs) {
    SuiteConfig config = suite_file.empty() ? default_suite() : load_suite(suite_file);
    if (jobs) config.options.jobs = *jobs;

    std::optional<SolveCache> cache;
    if (!cache_dir.empty()) cache.emplace(cache_dir);
    const SuiteReport report = run_suite(config, cache ? &*cache : nullptr);

    const std::string table = render_table(report);
    if (report_path.empty()) {
        std::cout << table;
    } else {
        write_file(report_path, table);
        std::cout << table;
    }
    std::string records = records_path;
    if (records.empty() && !report_path.empty()) records = report_path + ".jsonl";
    if (!records.empty()) write_file(records, to_jsonl(report.records));
    if (!csv_path.empty()) write_file(csv_path, render_csv(report));
    return report.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Total dominator colouring toolkit"};
    app.require_subcommand(1);

    std::string expr;
    std::string out_format = "dimacs";
    auto* build = app.add_subcommand("build", "Emit the graph of a family expression");
    build->add_option("expr", expr, "Family expression, e.g. corona(C(4),K(2))")->required();
    build->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"dimacs", "json"}));

    std::string dimacs_file;
    std::string what = "tdchromatic";
    std::optional<std::uint64_t> budget;
    bool json = false;
    auto* solve = app.add_subcommand("solve", "Exact solve with witness");
    solve->add_option("expr", expr, "Family expression");
    solve->add_option("--dimacs", dimacs_file, "Read the graph from a DIMACS .col file");
    solve->add_option("--what", what, "Quantity to compute")
        ->check(CLI::IsMember({"tdchromatic", "chromatic", "totaldom"}));
    solve->add_option("--budget", budget, "Search node budget");
    solve->add_flag("--json", json, "Machine-readable output");

    auto* formula = app.add_subcommand("formula", "Closed-form value for a family expression");
    formula->add_option("expr", expr, "Family expression")->required();
    formula->add_flag("--json", json, "Machine-readable output");

    auto* bounds = app.add_subcommand("bounds", "[max(gamma_t, chi), gamma_t + chi] interval");
    bounds->add_option("expr", expr, "Family expression")->required();
    bounds->add_flag("--json", json, "Machine-readable output");

    std::string suite_file, cache_dir, report_path, records_path, csv_path;
    std::optional<unsigned> jobs;
    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--suite", suite_file, "JSON suite file (default suite otherwise)");
    verify->add_option("--cache", cache_dir, "Solve cache directory");
    verify->add_option("--report", report_path, "Write the text table here (records go to <path>.jsonl)");
    verify->add_option("--records", records_path, "Write JSONL records here");
    verify->add_option("--csv", csv_path, "Write a CSV summary here");
    verify->add_option("--jobs", jobs, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*build) return cmd_build(expr, out_format);
        if (*solve) {
            if (expr.empty() == dimacs_file.empty()) {
                std::cerr << "solve: give exactly one of <expr> or --dimacs FILE\n";
                return kExitUsage;
            }
            return cmd_solve(expr, dimacs_file, what, budget, json);
        }
        if (*formula) return cmd_formula(expr, json);
        if (*bounds) return cmd_bounds(expr, json);
        if (*verify) return cmd_verify(suite_file, cache_dir, report_path, records_path, csv_path, jobs);
    } catch (const InconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
