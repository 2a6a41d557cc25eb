#include "cli.hpp"

#include "lcalg/algebra.hpp"
#include "lcalg/annih.hpp"
#include "lcalg/errors.hpp"
#include "lcalg/expr.hpp"
#include "lcalg/funceq.hpp"
#include "lcalg/grading.hpp"
#include "lcalg/module.hpp"
#include "lcalg/snf.hpp"
#include "lcalg/specfile.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>

namespace lcalg::cli {

namespace {

using json = nlohmann::ordered_json;

struct Outcome {
    std::vector<Report> reports;
    json result = json::object();
    /// Extra human-readable lines printed before the report summaries.
    std::vector<std::string> lines;
};

json strings(const std::vector<std::string>& v) { return json(v); }

json scalars(const std::vector<Scalar>& v)
{
    json out = json::array();
    for (const auto& s : v) out.push_back(s.to_string());
    return out;
}

json report_json(const Report& r)
{
    json checks = json::array();
    for (const auto& c : r.checks) {
        json j;
        j["id"] = c.id;
        j["status"] = std::string(to_string(c.status));
        j["witnesses"] = strings(c.witnesses);
        if (!c.detail.empty()) j["detail"] = c.detail;
        checks.push_back(std::move(j));
    }
    json out;
    out["name"] = r.name;
    out["status"] = r.passed() ? "pass" : "fail";
    out["summary"] = {{"pass", r.count(Status::Pass)}, {"fail", r.count(Status::Fail)},
                      {"skipped", r.count(Status::Skipped)}};
    out["checks"] = std::move(checks);
    return out;
}

void print_report(std::ostream& out, const Report& r)
{
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.count(Status::Pass) << " passed, "
        << r.count(Status::Fail) << " failed, " << r.count(Status::Skipped) << " skipped\n";
    for (const auto& c : r.checks) {
        if (c.status != Status::Fail) continue;
        out << "  fail " << c.id;
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
        for (const auto& w : c.witnesses) out << "    " << w << "\n";
    }
}

Report named(Report r, std::string name)
{
    r.name = std::move(name);
    return r;
}

// ---- commands ----

struct SpecArgs {
    std::string path;
    std::string module;
};

Outcome check_algebra(const SpecArgs& a)
{
    SpecFile s = load_spec(a.path);
    Outcome o;
    o.reports.push_back(named(check_skew(s.algebra), "skew"));
    o.reports.push_back(named(check_jacobi(s.algebra), "jacobi"));
    o.result["generators"] = strings(s.algebra.labels());
    o.result["truncation"] = s.algebra.truncation() ? json(*s.algebra.truncation()) : json(nullptr);
    return o;
}

Outcome check_module_cmd(const SpecArgs& a)
{
    SpecFile s = load_spec(a.path);
    const ModuleSpec& m = s.module(a.module);
    Outcome o;
    o.reports.push_back(named(check_module(s.algebra, m.module), "module " + m.name));
    o.result["module"] = m.name;
    o.result["rank"] = m.module.rank();
    return o;
}

// Σ λ^n/n! g_(n)u against g_λ u, for u = ∂^s e_j.
Report reconstruction(const ConformalModule& M, const std::string& name)
{
    Report r;
    r.name = "reconstruction " + name;
    const MultiPoly d = d_var(), l = l_var();
    for (const auto& [g, matrix] : M.actions()) {
        int top = 0;
        for (const auto& row : matrix)
            for (const auto& e : row)
                if (!e.is_zero()) top = std::max(top, e.total_degree().value());
        for (std::size_t j = 0; j < M.rank(); ++j)
            for (int s = 0; s <= 2; ++s) {
                ModuleElement u = basis_vector(M, j);
                u[j] = d.pow(static_cast<unsigned>(s));
                ModuleElement sum(M.rank());
                for (int n = 0; n <= top + s; ++n) {
                    ModuleElement part = module_action_n(M, g, n, u);
                    MultiPoly scale = l.pow(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n)).inverse();
                    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += part[k] * scale;
                }
                ModuleElement want = act_generator(M, g, u, l);
                std::string id = "g" + std::to_string(g) + " on d^" + std::to_string(s) + "*" + M.basis()[j];
                if (sum == want) {
                    r.pass(id);
                } else {
                    std::vector<std::string> w;
                    for (std::size_t k = 0; k < sum.size(); ++k) w.push_back((sum[k] - want[k]).to_string());
                    r.fail(id, w);
                }
            }
    }
    return r;
}

// "L:2" -> L_(2)
Symbol symbol(const ConformalAlgebra& A, const std::string& text)
{
    std::size_t colon = text.rfind(':');
    if (colon == std::string::npos) throw InvalidParams("symbols are written GENERATOR:INDEX, got '" + text + "'");
    auto g = A.index_of(text.substr(0, colon));
    if (!g) throw InvalidParams("unknown generator '" + text.substr(0, colon) + "'");
    std::string idx = text.substr(colon + 1);
    if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidParams("bad symbol index in '" + text + "'");
    return Symbol{*g, std::stoi(idx)};
}

Outcome annih_check(const SpecArgs& a, int depth, const std::vector<std::string>& bracket)
{
    if (depth < 0) throw InvalidParams("depth must be nonnegative");
    SpecFile s = load_spec(a.path);
    AnnihAlgebra X(s.algebra, depth);
    Outcome o;
    if (!bracket.empty()) {
        if (bracket.size() != 2) throw InvalidParams("--bracket takes two symbols");
        SymbolCombination c = annih_bracket(X, symbol(s.algebra, bracket[0]), symbol(s.algebra, bracket[1]));
        o.result["bracket"] = to_string(c, s.algebra);
        o.lines.push_back("[" + bracket[0] + ", " + bracket[1] + "] = " + to_string(c, s.algebra));
    }
    o.reports.push_back(named(check_annih_lie(X), "annihilation lie"));
    if (!a.module.empty()) {
        const ModuleSpec& m = s.module(a.module);
        o.reports.push_back(reconstruction(m.module, m.name));
    } else {
        for (const auto& m : s.modules) o.reports.push_back(reconstruction(m.module, m.name));
    }
    o.result["depth"] = depth;
    o.result["symbols"] = X.symbols().size();
    return o;
}

Outcome weights(const SpecArgs& a, int degree)
{
    if (degree < 0) throw InvalidParams("degree must be nonnegative");
    SpecFile s = load_spec(a.path);
    const ModuleSpec& m = s.module(a.module);
    GenIndex vir = 0;
    if (m.virasoro)
        vir = *m.virasoro;
    else if (s.algebra.size() != 1)
        throw InvalidParams("module '" + m.name + "' names no virasoro generator");
    WeightAnalysis w = weight_spaces(m.module, vir, degree, m.completely_nontrivial);
    Outcome o;
    Report resolved;
    resolved.name = "eigenvalues";
    if (w.unresolved == 0)
        resolved.pass("all eigenvalues on the diagonal");
    else
        resolved.fail("all eigenvalues on the diagonal", {}, std::to_string(w.unresolved) + " unresolved");
    o.reports.push_back(resolved);
    o.reports.push_back(named(w.bound, "dimension bound"));

    json list = json::array();
    for (const auto& r : w.weights) {
        json basis = json::array();
        for (const auto& v : r.basis) basis.push_back(to_string(v, m.module.basis()));
        list.push_back({{"weight", r.weight.to_string()}, {"dim", r.dim()}, {"basis", basis}});
        o.lines.push_back("weight " + r.weight.to_string() + "  dim " + std::to_string(r.dim()));
    }
    o.result["module"] = m.name;
    o.result["degree_bound"] = degree;
    o.result["weights"] = std::move(list);
    o.result["unresolved"] = w.unresolved;
    return o;
}

std::map<std::string, std::string> key_values(const std::string& text)
{
    std::map<std::string, std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        start = comma == std::string::npos ? text.size() + 1 : comma + 1;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
            return s;
        };
        item = trim(item);
        if (item.empty()) continue;
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw InvalidParams("expected key=value, got '" + item + "'");
        std::string key = trim(item.substr(0, eq));
        if (!out.emplace(key, trim(item.substr(eq + 1))).second)
            throw InvalidParams("parameter '" + key + "' given twice");
    }
    return out;
}

int to_int(const std::string& key, const std::string& value)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size()) throw InvalidParams("'" + key + "' must be an integer");
    return v;
}

Outcome solve_funceq(const std::string& params, const std::string& variant)
{
    auto kv = key_values(params);
    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto need = [&](const std::string& key) {
        auto v = take(key);
        if (!v) throw InvalidParams("missing parameter '" + key + "'");
        return *v;
    };

    Outcome o;
    SolutionBasis sol;
    std::function<MultiPoly(const MultiPoly&)> residual;
    if (variant == "homogeneous") {
        Scalar a = parse_scalar(need("a")), di = parse_scalar(need("di")), dj = parse_scalar(need("dj"));
        int k = to_int("k", need("k"));
        if (!kv.empty()) throw InvalidParams("unknown parameter '" + kv.begin()->first + "'");
        sol = solve_homogeneous(a, di, dj, k);
        residual = [=](const MultiPoly& f) { return homogeneous_residual(a, di, dj, f); };
    } else if (variant == "intertwiner" || variant == "bcsx") {
        FuncEqInstance inst;
        inst.a = parse_scalar(need("a"));
        inst.b = parse_scalar(need("b"));
        inst.delta_i = parse_scalar(need("di"));
        inst.c_i = parse_scalar(need("ci"));
        inst.delta_j = parse_scalar(need("dj"));
        inst.c_j = parse_scalar(need("cj"));
        inst.degree_bound = to_int("D", need("D"));
        if (auto k = take("k")) inst.homogeneous_degree = to_int("k", *k);
        if (!kv.empty()) throw InvalidParams("unknown parameter '" + kv.begin()->first + "'");
        if (variant == "bcsx") {
            sol = bcsx_variant_solver(inst);
            residual = [=](const MultiPoly& q) { return bcsx_residual(inst, q); };
        } else {
            sol = solve_intertwiner(inst);
            residual = [=](const MultiPoly& f) { return intertwiner_residual(inst, f); };
        }
    } else {
        throw InvalidParams("unknown variant '" + variant + "'");
    }

    Report r;
    r.name = "residuals";
    json basis = json::array();
    for (std::size_t n = 0; n < sol.basis.size(); ++n) {
        const MultiPoly& f = sol.basis[n];
        MultiPoly res = residual(f);
        std::string id = "basis[" + std::to_string(n) + "]";
        if (res.is_zero())
            r.pass(id);
        else
            r.fail(id, {res.to_string()});
        basis.push_back(f.to_string());
        o.lines.push_back("solution " + f.to_string());
    }
    if (sol.basis.empty()) r.pass("empty basis");
    o.reports.push_back(r);
    o.lines.insert(o.lines.begin(), "dimension " + std::to_string(sol.dimension()));
    o.result["variant"] = variant;
    o.result["dimension"] = sol.dimension();
    o.result["basis"] = std::move(basis);
    return o;
}

std::vector<Scalar> scalar_list(const std::string& text)
{
    std::vector<Scalar> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        out.push_back(parse_scalar(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        start = comma == std::string::npos ? text.size() + 1 : comma + 1;
    }
    return out;
}

Outcome verify_table(const std::string& samples_arg)
{
    std::vector<Scalar> samples = default_table_samples();
    if (!samples_arg.empty()) {
        if (samples_arg.find_first_not_of("0123456789") == std::string::npos) {
            std::size_t n = std::stoul(samples_arg);
            if (n == 0 || n > samples.size())
                throw InvalidParams("--samples takes 1.." + std::to_string(samples.size()) + " or a list of values");
            samples.resize(n);
        } else {
            samples = scalar_list(samples_arg);
        }
    }
    std::vector<TableCheck> checks = verify_solution_table_checks(samples, default_perturbations());
    Outcome o;
    o.reports.push_back(named(to_report(checks), "solution table"));
    json rows = json::array();
    std::map<std::string, std::pair<int, int>> per_row;
    for (const auto& c : checks) {
        rows.push_back({{"row", c.row},
                        {"perturbed", c.perturbed},
                        {"a", c.a.to_string()},
                        {"delta_i", c.delta_i.to_string()},
                        {"delta_j", c.delta_j.to_string()},
                        {"k", c.k},
                        {"expected_dim", c.expected_dim},
                        {"actual_dim", c.actual_dim},
                        {"passed", c.passed()}});
        auto& [total, ok] = per_row[c.row];
        ++total;
        ok += c.passed() ? 1 : 0;
    }
    for (const auto& [row, count] : per_row)
        o.lines.push_back("row " + row + ": " + std::to_string(count.second) + "/" + std::to_string(count.first));
    o.result["samples"] = scalars(samples);
    o.result["checks"] = std::move(rows);
    return o;
}

std::vector<Scalar> parse_grid(const std::string& grid)
{
    if (grid.rfind("farey:", 0) == 0) {
        std::vector<std::string> parts;
        std::size_t start = 6;
        while (start <= grid.size()) {
            std::size_t colon = grid.find(':', start);
            parts.push_back(grid.substr(start, colon == std::string::npos ? std::string::npos : colon - start));
            start = colon == std::string::npos ? grid.size() + 1 : colon + 1;
        }
        if (parts.size() != 1 && parts.size() != 3) throw InvalidParams("grid is farey:D or farey:D:lo:hi");
        int den = to_int("farey denominator", parts[0]);
        if (den < 1) throw InvalidParams("farey denominator must be positive");
        Scalar lo = parts.size() == 3 ? parse_scalar(parts[1]) : Scalar(1);
        Scalar hi = parts.size() == 3 ? parse_scalar(parts[2]) : Scalar(2);
        return farey_grid(den, lo, hi);
    }
    return scalar_list(grid);
}

Outcome scan(const std::string& grid, int horizon, const std::string& rule_name, int max_p, int max_q)
{
    if (horizon < 1) throw InvalidParams("horizon must be positive");
    ScanRule rule;
    if (rule_name == "degrees")
        rule = ScanRule::Degrees;
    else if (rule_name == "jacobi")
        rule = ScanRule::Jacobi;
    else
        throw InvalidParams("unknown rule '" + rule_name + "'");

    Outcome o;
    Report r;
    r.name = "scan against the closed-form list";
    json rows = json::array();
    for (const Scalar& a1 : parse_grid(grid)) {
        ScanResult s = scan_a1(a1, horizon, rule);
        bool expected = in_admissible_list(a1, max_p, max_q);
        json row;
        row["a1"] = a1.to_string();
        row["admissible"] = s.admissible;
        row["expected"] = expected;
        row["witness_sequence"] = s.witness_sequence ? scalars(*s.witness_sequence) : json(nullptr);
        row["witness_degrees"] = s.witness_degrees ? json(*s.witness_degrees) : json(nullptr);
        row["rejection_depth"] = s.rejection_depth ? json(*s.rejection_depth) : json(nullptr);
        rows.push_back(std::move(row));

        std::string verdict = s.admissible ? "admissible" : "rejected";
        if (s.rejection_depth) verdict += " at grade " + std::to_string(*s.rejection_depth);
        o.lines.push_back("a1 = " + a1.to_string() + ": " + verdict + (expected ? "  (listed)" : "  (not listed)"));
        std::string id = "a1=" + a1.to_string();
        if (s.admissible == expected) {
            r.pass(id, verdict);
        } else {
            std::vector<std::string> w;
            if (s.witness_sequence) {
                std::string seq;
                for (const auto& x : *s.witness_sequence) seq += (seq.empty() ? "" : ", ") + x.to_string();
                w.push_back(seq);
            }
            r.fail(id, w, verdict + (expected ? ", listed" : ", not listed"));
        }
    }
    o.reports.push_back(r);
    o.result["horizon"] = horizon;
    o.result["rule"] = rule_name;
    o.result["max_p"] = max_p;
    o.result["max_q"] = max_q;
    o.result["rows"] = std::move(rows);
    return o;
}

Outcome snf(const std::string& text)
{
    std::vector<std::vector<UniPoly>> rows;
    for (const auto& row : parse_poly_rows(text)) {
        std::vector<UniPoly> out;
        for (const auto& e : row) {
            try {
                out.push_back(UniPoly::from_multi(e));
            } catch (const std::invalid_argument&) {
                throw InvalidParams("matrix entry '" + e.to_string() + "' is not a polynomial in d");
            }
        }
        if (!rows.empty() && out.size() != rows.front().size()) throw InvalidParams("rows differ in length");
        rows.push_back(std::move(out));
    }
    PolyMatrix mx = PolyMatrix::from_rows(rows);
    SmithForm f = smith_normal_form(mx);
    TorsionSplit t = torsion_split(mx);

    Report r;
    r.name = "smith form";
    PolyMatrix prod = f.U * mx * f.V;
    if (prod == f.D)
        r.pass("U*M*V = D");
    else
        r.fail("U*M*V = D", {prod.to_string()});
    for (auto [name, m] : {std::pair<const char*, const PolyMatrix*>{"det U", &f.U}, {"det V", &f.V}}) {
        UniPoly det = determinant(*m);
        if (det.degree() == 0)
            r.pass(std::string(name) + " is a unit");
        else
            r.fail(std::string(name) + " is a unit", {det.to_string()});
    }
    bool diagonal = true;
    for (std::size_t i = 0; i < f.D.rows(); ++i)
        for (std::size_t j = 0; j < f.D.cols(); ++j)
            if (i != j && !f.D(i, j).is_zero()) diagonal = false;
    if (diagonal)
        r.pass("D is diagonal");
    else
        r.fail("D is diagonal", {f.D.to_string()});
    bool chain = true;
    for (std::size_t i = 0; i + 1 < f.invariants.size(); ++i)
        chain = chain && f.invariants[i].divides(f.invariants[i + 1]);
    if (chain)
        r.pass("divisibility chain");
    else
        r.fail("divisibility chain", {});

    Outcome o;
    o.reports.push_back(r);
    json inv = json::array(), tor = json::array();
    for (const auto& p : f.invariants) inv.push_back(p.to_string());
    for (const auto& p : t.torsion) tor.push_back(p.to_string());
    o.lines.push_back("D = " + f.D.to_string());
    o.lines.push_back("free rank " + std::to_string(t.free_rank));
    std::string torsion;
    for (const auto& p : t.torsion) torsion += (torsion.empty() ? "" : ", ") + p.to_string();
    o.lines.push_back("torsion " + (torsion.empty() ? std::string("none") : torsion));
    o.result["matrix"] = mx.to_string();
    o.result["D"] = f.D.to_string();
    o.result["U"] = f.U.to_string();
    o.result["V"] = f.V.to_string();
    o.result["invariants"] = std::move(inv);
    o.result["free_rank"] = t.free_rank;
    o.result["torsion"] = std::move(tor);
    return o;
}

Outcome check_grading(const SpecArgs& a)
{
    SpecFile s = load_spec(a.path);
    GradeSplit split = split_I0_I1(s.algebra);
    GradedProfile profile = profile_from_table(s.algebra);
    Outcome o;
    o.reports.push_back(named(split.report, "grade split"));
    o.reports.push_back(named(check_b_linear(s.algebra), "b linear"));
    o.reports.push_back(named(profile.invariants, "profile invariants"));
    json a_seq = json::object(), b_seq = json::object();
    for (const auto& [i, v] : profile.a_seq) a_seq[std::to_string(i)] = v.to_string();
    for (const auto& [i, v] : profile.b_seq) b_seq[std::to_string(i)] = v.to_string();
    o.result["I0"] = split.I0;
    o.result["I1"] = split.I1;
    o.result["a"] = std::move(a_seq);
    o.result["b"] = std::move(b_seq);
    return o;
}

std::string error_type(const std::exception& e)
{
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    if (dynamic_cast<const UnknownGenerator*>(&e)) return "UnknownGenerator";
    if (dynamic_cast<const DuplicateDefinition*>(&e)) return "DuplicateDefinition";
    if (dynamic_cast<const SpecError*>(&e)) return "SpecError";
    if (dynamic_cast<const TruncationExceeded*>(&e)) return "TruncationExceeded";
    if (dynamic_cast<const InvalidStructure*>(&e)) return "InvalidStructure";
    if (dynamic_cast<const InvalidParams*>(&e)) return "InvalidParams";
    if (dynamic_cast<const MissingAction*>(&e)) return "MissingAction";
    if (dynamic_cast<const NotVirasoroAtZero*>(&e)) return "NotVirasoroAtZero";
    if (dynamic_cast<const HypothesisViolated*>(&e)) return "HypothesisViolated";
    if (dynamic_cast<const MalformedBracket*>(&e)) return "MalformedBracket";
    if (dynamic_cast<const NotASolution*>(&e)) return "NotASolution";
    return "Error";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact checks for Lie conformal algebras and their modules", "lcalg"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string json_path;
    bool timing = false;
    app.add_option("--json", json_path, "Write the machine-readable report to this file");
    app.add_flag("--timing", timing, "Include wall-clock timings in the JSON report");

    SpecArgs spec;
    int depth = 4, degree = 3, horizon = 12, max_p = 6, max_q = 11;
    std::vector<std::string> bracket;
    std::string params, variant = "intertwiner", samples, grid = "farey:6", rule = "degrees", matrix;

    auto with_spec = [&](CLI::App* sub, bool module) {
        sub->add_option("spec", spec.path, "Spec file")->required();
        if (module) sub->add_option("--module", spec.module, "Module section name (default: the first)");
        return sub;
    };
    std::map<std::string, std::function<Outcome()>> handlers;
    auto* c = with_spec(app.add_subcommand("check-algebra", "Skew-symmetry and Jacobi identity"), false);
    handlers[c->get_name()] = [&] { return check_algebra(spec); };
    c = with_spec(app.add_subcommand("check-module", "Module axiom"), true);
    handlers[c->get_name()] = [&] { return check_module_cmd(spec); };
    c = with_spec(app.add_subcommand("annih-check", "Annihilation algebra and the n-indexed module actions"), true);
    c->add_option("--depth", depth, "Largest symbol index")->capture_default_str();
    c->add_option("--bracket", bracket, "Also bracket two symbols, e.g. L:2,L:3")->delimiter(',')->expected(2);
    handlers[c->get_name()] = [&] { return annih_check(spec, depth, bracket); };
    c = with_spec(app.add_subcommand("weights", "Weight spaces of a module"), true);
    c->add_option("--degree", degree, "Bound on the d-degree")->capture_default_str();
    handlers[c->get_name()] = [&] { return weights(spec, degree); };
    c = with_spec(app.add_subcommand("check-grading", "Grade split, b-linearity and weight profile"), false);
    handlers[c->get_name()] = [&] { return check_grading(spec); };
    c = app.add_subcommand("solve-funceq", "Solve the intertwiner functional equation");
    c->add_option("--params", params, "a=..,b=..,di=..,ci=..,dj=..,cj=..,D=..[,k=..]")->required();
    c->add_option("--variant", variant, "intertwiner | homogeneous | bcsx")->capture_default_str();
    handlers[c->get_name()] = [&] { return solve_funceq(params, variant); };
    c = app.add_subcommand("verify-solution-table", "Check the homogeneous solution table");
    c->add_option("--samples", samples, "Number of default samples, or a comma-separated list");
    handlers[c->get_name()] = [&] { return verify_table(samples); };
    c = app.add_subcommand("scan-a1", "Finite-horizon scan of a_1 values");
    c->add_option("--grid", grid, "farey:D[:lo:hi] or a comma-separated list")->capture_default_str();
    c->add_option("--horizon", horizon, "Top grade")->capture_default_str();
    c->add_option("--rule", rule, "degrees | jacobi")->capture_default_str();
    c->add_option("--max-p", max_p, "Bound on p in 2-1/p")->capture_default_str();
    c->add_option("--max-q", max_q, "Bound on odd q in 2-2/q")->capture_default_str();
    handlers[c->get_name()] = [&] { return scan(grid, horizon, rule, max_p, max_q); };
    c = app.add_subcommand("snf", "Smith normal form of a matrix over C[d]");
    c->add_option("--matrix", matrix, "Rows split by ';', entries by ','")->required();
    handlers[c->get_name()] = [&] { return snf(matrix); };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return BadInput;
    }

    std::string command = app.get_subcommands().front()->get_name();
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;

    auto start = std::chrono::steady_clock::now();
    int code = Ok;
    try {
        Outcome o = handlers.at(command)();
        bool passed = true;
        json reports = json::array();
        for (const auto& r : o.reports) {
            passed = passed && r.passed();
            reports.push_back(report_json(r));
        }
        code = passed ? Ok : CheckFailed;
        doc["status"] = passed ? "pass" : "fail";
        doc["reports"] = std::move(reports);
        doc["result"] = std::move(o.result);

        for (const auto& line : o.lines) out << line << "\n";
        for (const auto& r : o.reports) print_report(out, r);
        out << (passed ? "status: pass" : "status: fail") << "\n";
    } catch (const std::exception& e) {
        code = dynamic_cast<const TruncationExceeded*>(&e) ? Truncation : BadInput;
        json error;
        error["type"] = error_type(e);
        error["message"] = e.what();
        if (auto* s = dynamic_cast<const SpecError*>(&e)) {
            error["line"] = s->line();
            error["column"] = s->column();
        }
        doc["status"] = "error";
        doc["reports"] = json::array();
        doc["result"] = nullptr;
        doc["error"] = std::move(error);
        err << error_type(e) << ": " << e.what() << "\n";
    }
    doc["exit_code"] = code;
    if (timing) {
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        doc["timing"] = {{"total_ms", ms}};
    }

    if (!json_path.empty()) {
        std::ofstream f(json_path, std::ios::binary);
        if (!f) {
            err << "cannot write " << json_path << "\n";
            return BadInput;
        }
        f << doc.dump(2) << "\n";
    }
    return code;
}

}  // namespace lcalg::cli
