#include "tdc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "tdc/expr.hpp"
#include "tdc/families.hpp"

namespace tdc {

using ordered_json = nlohmann::ordered_json;

namespace {

double rounded_seconds(std::chrono::nanoseconds ns) {
    return std::round(static_cast<double>(ns.count()) / 1e3) / 1e6;
}

void require_consistent(bool ok, const std::string& graph_key, const std::string& what) {
    if (!ok) throw InconsistencyError(graph_key + ": " + what);
}

template <class T>
void put_optional(ordered_json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
    else j[key] = nullptr;
}

template <class T>
std::optional<T> get_optional(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

ordered_json outcome_to_json(const SolveOutcome& o) {
    ordered_json j;
    j["graph_key"] = o.graph_key;
    j["vertex_count"] = o.vertex_count;
    put_optional(j, "td_value", o.td_value);
    j["witness"] = o.witness;
    j["nodes_explored"] = o.nodes_explored;
    j["elapsed"] = o.elapsed;
    j["lower_bound_used"] = o.lower_bound_used;
    j["upper_bound_used"] = o.upper_bound_used;
    put_optional(j, "chromatic_number", o.chromatic_number);
    j["chromatic_witness"] = o.chromatic_witness;
    put_optional(j, "total_domination_number", o.total_domination_number);
    j["total_dominating_set"] = o.total_dominating_set;
    put_optional(j, "oracle_value", o.oracle_value);
    return j;
}

SolveOutcome outcome_from_json(const nlohmann::json& j) {
    SolveOutcome o;
    o.graph_key = j.at("graph_key").get<std::string>();
    o.vertex_count = j.at("vertex_count").get<std::size_t>();
    o.td_value = get_optional<std::uint32_t>(j, "td_value");
    o.witness = j.at("witness").get<std::vector<Color>>();
    o.nodes_explored = j.at("nodes_explored").get<std::uint64_t>();
    o.elapsed = j.at("elapsed").get<double>();
    o.lower_bound_used = j.at("lower_bound_used").get<std::uint32_t>();
    o.upper_bound_used = j.at("upper_bound_used").get<std::uint32_t>();
    o.chromatic_number = get_optional<std::uint32_t>(j, "chromatic_number");
    o.chromatic_witness = j.at("chromatic_witness").get<std::vector<Color>>();
    o.total_domination_number = get_optional<std::uint32_t>(j, "total_domination_number");
    o.total_dominating_set = j.at("total_dominating_set").get<std::vector<VertexId>>();
    o.oracle_value = get_optional<std::uint32_t>(j, "oracle_value");
    return o;
}

std::vector<Color> to_vector(const Coloring& c) { return {c.assignment().begin(), c.assignment().end()}; }

} // namespace

SolveOutcome solve_graph(const Graph& g, const HarnessOptions& opts) {
    SolveOutcome o;
    o.graph_key = canonical_key(g);
    o.vertex_count = g.vertex_count();

    const SolveResult chi = chromatic_number(g, opts.solve);
    if (chi.solved()) {
        require_consistent(is_proper(g, *chi.coloring) && chi.coloring->color_count() == chi.value, o.graph_key,
                           "chromatic witness failed is_proper");
        o.chromatic_number = chi.value;
        o.chromatic_witness = to_vector(*chi.coloring);
    }
    const SolveResult gamma = total_domination_number(g, opts.solve);
    if (gamma.solved()) {
        require_consistent(is_total_dominating_set(g, *gamma.vertex_set) && gamma.vertex_set->size() == gamma.value,
                           o.graph_key, "total domination witness failed is_total_dominating_set");
        o.total_domination_number = gamma.value;
        o.total_dominating_set = *gamma.vertex_set;
    }

    const SolveResult td = td_chromatic_number(g, opts.solve);
    o.nodes_explored = td.nodes_explored;
    o.elapsed = rounded_seconds(td.elapsed);
    o.lower_bound_used = td.lower_bound_used;
    o.upper_bound_used = td.upper_bound_used;
    if (td.solved()) {
        require_consistent(is_td_coloring(g, *td.coloring) && td.coloring->color_count() == td.value, o.graph_key,
                           "TD witness failed is_td_coloring");
        o.td_value = td.value;
        o.witness = to_vector(*td.coloring);
        if (o.chromatic_number && o.total_domination_number) {
            const std::uint32_t lo = std::max(*o.chromatic_number, *o.total_domination_number);
            const std::uint32_t hi = *o.chromatic_number + *o.total_domination_number;
            require_consistent(lo <= td.value && td.value <= hi, o.graph_key,
                               "TD value " + std::to_string(td.value) + " outside [" + std::to_string(lo) + ", " +
                                   std::to_string(hi) + "]");
        }
    }

    if (g.vertex_count() <= opts.oracle_cap) {
        const SolveResult oracle = td_chromatic_oracle(g, OracleOptions{opts.oracle_cap});
        require_consistent(is_td_coloring(g, *oracle.coloring), o.graph_key, "oracle witness failed is_td_coloring");
        o.oracle_value = oracle.value;
        if (o.td_value) {
            require_consistent(*o.td_value == oracle.value, o.graph_key,
                               "solver value " + std::to_string(*o.td_value) + " != oracle value " +
                                   std::to_string(oracle.value));
        }
    }
    return o;
}

SolveCache::SolveCache(std::filesystem::path dir) : file_(std::move(dir) / "solve-cache.jsonl") {
    std::filesystem::create_directories(file_.parent_path());
    std::ifstream in(file_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line, nullptr, false);
        // A torn final line from an interrupted run is dropped.
        if (j.is_discarded() || !j.contains("cache_key") || !j.contains("outcome")) continue;
        entries_[j.at("cache_key").get<std::string>()] = outcome_from_json(j.at("outcome"));
    }
}

std::optional<SolveOutcome> SolveCache::find(const std::string& cache_key) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(cache_key);
    if (it == entries_.end()) return std::nullopt;
    ++hits_;
    return it->second;
}

void SolveCache::store(const std::string& cache_key, const SolveOutcome& outcome) {
    std::lock_guard lock(mutex_);
    if (!entries_.emplace(cache_key, outcome).second) return;
    ordered_json j;
    j["schema_version"] = kRecordSchemaVersion;
    j["cache_key"] = cache_key;
    j["outcome"] = outcome_to_json(outcome);
    std::ofstream out(file_, std::ios::app);
    out << j.dump() << '\n';
    out.flush();
    if (!out) throw std::runtime_error("cannot append to " + file_.string());
}

std::size_t SolveCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

std::string SolveCache::key_for(const Graph& g, const HarnessOptions& opts) {
    std::string key = canonical_key(g) + "|" + kSolverVersion;
    key += "|nodes=" + (opts.solve.node_budget ? std::to_string(*opts.solve.node_budget) : std::string("none"));
    key += "|ms=" + (opts.solve.time_budget ? std::to_string(opts.solve.time_budget->count()) : std::string("none"));
    key += "|cap=" + std::to_string(opts.oracle_cap);
    return key;
}

const char* to_string(Match m) {
    switch (m) {
    case Match::confirmed: return "confirmed";
    case Match::refuted: return "refuted";
    case Match::unknown: return "unknown";
    }
    return "unknown";
}

Verifier::Verifier(HarnessOptions opts, SolveCache* cache) : opts_(opts), cache_(cache) {}

SolveOutcome Verifier::compute(const Graph& g) {
    if (!cache_) return solve_graph(g, opts_);
    const std::string key = SolveCache::key_for(g, opts_);
    if (auto hit = cache_->find(key)) return *hit;
    SolveOutcome o = solve_graph(g, opts_);
    cache_->store(key, o);
    return o;
}

const SolveOutcome& Verifier::outcome(const Graph& g) {
    const std::string key = canonical_key(g);
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return *it->second;
    }
    auto solved = std::make_shared<const SolveOutcome>(compute(g));
    std::lock_guard lock(mutex_);
    return *memo_.emplace(key, std::move(solved)).first->second;
}

void Verifier::prefetch(const std::vector<Graph>& graphs) {
    std::vector<const Graph*> unique;
    std::set<std::string> seen;
    for (const Graph& g : graphs) {
        if (seen.insert(canonical_key(g)).second) unique.push_back(&g);
    }
    unsigned jobs = opts_.jobs ? opts_.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, unique.size())));

    std::vector<std::exception_ptr> errors(unique.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < unique.size(); i = next++) {
            try {
                outcome(*unique[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

namespace {

bool solvable(const Graph& g) { return g.vertex_count() >= 2 && !g.has_isolated_vertex(); }

} // namespace

VerificationRecord Verifier::verify(const FamilySpec& spec) {
    VerificationRecord r;
    r.spec_text = spec.to_string();
    const Graph g = realize(spec);
    r.vertex_count = g.vertex_count();
    r.graph_key = canonical_key(g);

    const SolveOutcome& o = outcome(g);
    r.solver_value = o.td_value;
    r.oracle_value = o.oracle_value;
    r.elapsed = o.elapsed;
    r.witness = o.witness;
    r.nodes_explored = o.nodes_explored;
    r.chromatic_number = o.chromatic_number;
    r.total_domination_number = o.total_domination_number;

    const ComponentValue component = [this](const FamilySpec& operand) -> std::optional<std::uint32_t> {
        const Graph h = realize(operand);
        if (!solvable(h)) return std::nullopt;
        return outcome(h).td_value;
    };
    if (auto f = match_formula(spec, component)) {
        r.theorem_tag = f->theorem_tag;
        r.extension = f->extension;
        if (f->kind == FormulaKind::exact) {
            r.formula_value = f->value;
        } else if (f->kind == FormulaKind::upper_bound) {
            r.upper_bound = f->value;
            if (r.solver_value) r.bound_holds = *r.solver_value <= f->value;
        }
    }
    if (r.formula_value && r.solver_value) {
        r.match = *r.formula_value == *r.solver_value ? Match::confirmed : Match::refuted;
    }
    return r;
}

VerificationRecord verify_instance(const FamilySpec& spec, const SolveOptions& opts) {
    HarnessOptions h;
    h.solve = opts;
    Verifier v(h);
    return v.verify(spec);
}

std::vector<SharpnessRow> sharpness_check(Verifier& verifier) {
    const FamilySpec pairs[][2] = {
        {FamilySpec::cycle(4), FamilySpec::complete(2)},
        {FamilySpec::complete(2), FamilySpec::complete(3)},
        {FamilySpec::path(2), FamilySpec::complete(1)},
    };
    std::vector<SharpnessRow> rows;
    for (const auto& [g, h] : pairs) {
        const FamilySpec spec = FamilySpec::corona(g, h);
        const SolveOutcome& o = verifier.outcome(realize(spec));
        SharpnessRow row;
        row.spec_text = spec.to_string();
        row.value = o.td_value;
        row.bound = static_cast<std::uint32_t>(realize(g).vertex_count() + realize(h).vertex_count());
        row.sharp = row.value == row.bound;
        rows.push_back(row);
    }
    return rows;
}

SuiteConfig default_suite() {
    SuiteConfig c;
    auto& v = c.instances;
    auto add = [&v](std::string s) { v.push_back(std::move(s)); };
    for (int n = 2; n <= 12; ++n) add("P(" + std::to_string(n) + ")");
    for (int n = 3; n <= 12; ++n) add("C(" + std::to_string(n) + ")");
    for (int n = 2; n <= 6; ++n) add("corona(P(" + std::to_string(n) + "),K(1))");
    for (int n = 3; n <= 5; ++n) add("corona(C(" + std::to_string(n) + "),K(1))");
    for (int n = 2; n <= 4; ++n)
        for (int m = 1; m <= 3; ++m) add("corona(P(" + std::to_string(n) + "),E(" + std::to_string(m) + "))");
    for (const char* g : {"C(4)", "F(2)", "K(4)"}) add(std::string("corona(") + g + ",K(1))");
    add("corona(C(4),K(2))");
    add("corona(K(2),K(3))");
    const char* join_factors[] = {"P(2)", "P(3)", "P(4)", "C(5)", "K(3)"};
    for (const char* g : join_factors)
        for (const char* h : join_factors) add(std::string("join(") + g + "," + h + ")");
    for (int n = 2; n <= 4; ++n) add("F(" + std::to_string(n) + ")");
    add("D(4,2)");
    add("D(4,3)");
    add("D(5,2)");
    for (int n = 2; n <= 6; ++n) add("L(" + std::to_string(n) + ")");
    for (int n = 1; n <= 5; ++n) add("T(" + std::to_string(n) + ")");
    for (int n = 1; n <= 3; ++n) add("O(" + std::to_string(n) + ")");
    add("G(3,3)");
    add("G(3,4)");
    add("G(4,4)");
    return c;
}

namespace {

void expand_template(const std::string& tmpl, const std::map<std::string, std::pair<long, long>>& vars,
                     std::vector<std::string>& out) {
    std::vector<std::pair<std::string, std::pair<long, long>>> list(vars.begin(), vars.end());
    std::vector<long> current(list.size());
    auto emit = [&] {
        std::string s = tmpl;
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string needle = "{" + list[i].first + "}";
            for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle)) {
                s.replace(pos, needle.size(), std::to_string(current[i]));
            }
        }
        out.push_back(std::move(s));
    };
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == list.size()) {
            emit();
            return;
        }
        for (long x = list[depth].second.first; x <= list[depth].second.second; ++x) {
            current[depth] = x;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
}

} // namespace

SuiteConfig parse_suite(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("suite file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("suite file must hold a JSON object");

    SuiteConfig c;
    try {
        if (j.value("include_default", false)) c = default_suite();
        for (const auto& s : j.value("instances", nlohmann::json::array())) c.instances.push_back(s.get<std::string>());
        for (const auto& range : j.value("ranges", nlohmann::json::array())) {
            const std::string tmpl = range.at("template").get<std::string>();
            std::map<std::string, std::pair<long, long>> vars;
            for (const auto& [name, bounds] : range.items()) {
                if (name == "template") continue;
                const long lo = bounds.at(0).get<long>();
                const long hi = bounds.at(1).get<long>();
                if (lo > hi) throw std::runtime_error("empty range for '" + name + "' in " + tmpl);
                vars[name] = {lo, hi};
            }
            expand_template(tmpl, vars, c.instances);
        }
        if (j.contains("node_budget")) {
            if (j["node_budget"].is_null()) {
                c.options.solve.node_budget.reset();
            } else {
                const auto nodes = j["node_budget"].get<long long>();
                if (nodes <= 0) throw std::runtime_error("node_budget must be positive");
                c.options.solve.node_budget = static_cast<std::uint64_t>(nodes);
            }
        }
        if (j.contains("time_budget_ms")) {
            const auto ms = j["time_budget_ms"].get<long long>();
            if (ms <= 0) throw std::runtime_error("time_budget_ms must be positive");
            c.options.solve.time_budget = std::chrono::milliseconds(ms);
        }
        if (j.contains("oracle_cap")) {
            const auto cap = j["oracle_cap"].get<long long>();
            if (cap <= 0) throw std::runtime_error("oracle_cap must be positive");
            c.options.oracle_cap = static_cast<std::size_t>(cap);
        }
        if (j.contains("jobs")) c.options.jobs = j["jobs"].get<unsigned>();
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed suite file: ") + e.what());
    }
    if (c.instances.empty()) throw std::runtime_error("suite has no instances");
    return c;
}

SuiteConfig load_suite(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot read suite file " + file.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_suite(ss.str());
}

std::size_t SuiteReport::count(Match m) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [m](const auto& r) { return r.match == m; }));
}

std::size_t SuiteReport::budget_exhausted() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.solver_value; }));
}

std::size_t SuiteReport::bound_violations() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) {
        return r.bound_holds.has_value() && !*r.bound_holds;
    }));
}

int SuiteReport::exit_code() const {
    if (count(Match::refuted) > 0 || bound_violations() > 0) return kExitRefuted;
    if (budget_exhausted() > 0) return kExitBudget;
    return kExitOk;
}

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t ei = i, ej = j;
            while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
            while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
            const unsigned long long x = std::stoull(a.substr(i, ei - i));
            const unsigned long long y = std::stoull(b.substr(j, ej - j));
            if (x != y) return x < y;
            i = ei;
            j = ej;
            continue;
        }
        if (a[i] != b[j]) return a[i] < b[j];
        ++i;
        ++j;
    }
    return a.size() - i < b.size() - j;
}

namespace {

void collect_operands(const FamilySpec& spec, std::vector<Graph>& out) {
    if (!spec.is_product()) return;
    for (const FamilySpec* side : {&spec.left(), &spec.right()}) {
        Graph h = realize(*side);
        if (solvable(h) && h.is_connected()) out.push_back(std::move(h));
        collect_operands(*side, out);
    }
}

} // namespace

SuiteReport run_suite(const SuiteConfig& config, SolveCache* cache) {
    Verifier verifier(config.options, cache);

    std::vector<FamilySpec> specs;
    std::set<std::string> seen;
    for (const std::string& text : config.instances) {
        FamilySpec spec = parse_expr(text);
        if (seen.insert(spec.to_string()).second) specs.push_back(std::move(spec));
    }

    std::vector<Graph> graphs;
    for (const auto& spec : specs) {
        graphs.push_back(realize(spec));
        collect_operands(spec, graphs);
    }
    for (const char* s : {"corona(C(4),K(2))", "corona(K(2),K(3))", "corona(P(2),K(1))"}) {
        graphs.push_back(realize(parse_expr(s)));
    }
    verifier.prefetch(graphs);

    SuiteReport report;
    report.options = config.options;
    for (const auto& spec : specs) report.records.push_back(verifier.verify(spec));
    std::sort(report.records.begin(), report.records.end(),
              [](const auto& a, const auto& b) { return natural_less(a.spec_text, b.spec_text); });
    report.sharpness = sharpness_check(verifier);
    return report;
}

std::string record_to_json(const VerificationRecord& r) {
    ordered_json j;
    j["schema_version"] = kRecordSchemaVersion;
    j["spec_text"] = r.spec_text;
    j["vertex_count"] = r.vertex_count;
    put_optional(j, "formula_value", r.formula_value);
    j["theorem_tag"] = r.theorem_tag.empty() ? nlohmann::ordered_json(nullptr) : ordered_json(r.theorem_tag);
    put_optional(j, "solver_value", r.solver_value);
    put_optional(j, "oracle_value", r.oracle_value);
    j["match"] = to_string(r.match);
    j["elapsed"] = r.elapsed;
    j["graph_key"] = r.graph_key;
    j["witness"] = r.witness;
    j["nodes_explored"] = r.nodes_explored;
    put_optional(j, "chromatic_number", r.chromatic_number);
    put_optional(j, "total_domination_number", r.total_domination_number);
    put_optional(j, "upper_bound", r.upper_bound);
    put_optional(j, "bound_holds", r.bound_holds);
    j["extension"] = r.extension;
    return j.dump();
}

std::string to_jsonl(const std::vector<VerificationRecord>& records) {
    std::string out;
    for (const auto& r : records) out += record_to_json(r) + "\n";
    return out;
}

namespace {

std::string cell(const std::optional<std::uint32_t>& v) { return v ? std::to_string(*v) : "-"; }

} // namespace

std::string render_table(const SuiteReport& report) {
    std::ostringstream os;
    os << "Total dominator chromatic number verification\n";
    os << "solver " << kSolverVersion << ", node budget "
       << (report.options.solve.node_budget ? std::to_string(*report.options.solve.node_budget) : "none")
       << ", oracle cap " << report.options.oracle_cap << "\n";

    std::map<std::string, std::vector<const VerificationRecord*>> groups;
    for (const auto& r : report.records) groups[r.theorem_tag].push_back(&r);

    auto emit_group = [&](const std::string& title, const std::vector<const VerificationRecord*>& rows) {
        os << "\n[" << title << "]\n";
        os << std::left << std::setw(28) << "spec" << std::right << std::setw(4) << "n" << std::setw(9) << "formula"
           << std::setw(8) << "solver" << std::setw(8) << "oracle" << "  match\n";
        for (const auto* r : rows) {
            std::string formula = cell(r->formula_value);
            if (r->upper_bound) formula = "<=" + std::to_string(*r->upper_bound);
            std::string verdict = to_string(r->match);
            if (r->bound_holds) verdict += *r->bound_holds ? " (bound holds)" : " (bound violated)";
            if (r->extension) verdict += " (extension)";
            os << std::left << std::setw(28) << r->spec_text << std::right << std::setw(4) << r->vertex_count
               << std::setw(9) << formula << std::setw(8) << cell(r->solver_value) << std::setw(8)
               << cell(r->oracle_value) << "  " << verdict << "\n";
        }
    };
    for (const auto& [tag, rows] : groups) {
        if (!tag.empty()) emit_group(tag, rows);
    }
    if (auto it = groups.find(""); it != groups.end()) emit_group("no formula", it->second);

    if (!report.sharpness.empty()) {
        os << "\n[corona bound |V(G)|+|V(H)| sharpness]\n";
        os << std::left << std::setw(28) << "spec" << std::right << std::setw(8) << "value" << std::setw(8) << "bound"
           << "  sharp\n";
        for (const auto& s : report.sharpness) {
            os << std::left << std::setw(28) << s.spec_text << std::right << std::setw(8) << cell(s.value) << std::setw(8)
               << s.bound << "  " << (s.sharp ? "yes" : "no") << "\n";
        }
    }

    os << "\nsummary: " << report.records.size() << " instances, " << report.count(Match::confirmed)
       << " confirmed, " << report.count(Match::refuted) << " refuted, " << report.count(Match::unknown)
       << " unknown, " << report.budget_exhausted() << " budget-exhausted, " << report.bound_violations()
       << " bound violations\n";
    return os.str();
}

std::string render_csv(const SuiteReport& report) {
    std::ostringstream os;
    os << "spec_text,vertex_count,formula_value,theorem_tag,solver_value,oracle_value,match\n";
    auto opt = [](const std::optional<std::uint32_t>& v) { return v ? std::to_string(*v) : std::string(); };
    for (const auto& r : report.records) {
        os << '"' << r.spec_text << '"' << ',' << r.vertex_count << ',' << opt(r.formula_value) << ','
           << r.theorem_tag << ',' << opt(r.solver_value) << ',' << opt(r.oracle_value) << ',' << to_string(r.match)
           << "\n";
    }
    return os.str();
}

} // namespace tdc
