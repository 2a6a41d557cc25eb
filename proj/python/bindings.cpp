// Python bindings. Scalars cross the boundary as strings ("1/2", "3+i"),
// polynomials as canonical text.

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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace lcalg;

namespace {

py::dict report_dict(const Report& r)
{
    py::list checks;
    for (const auto& c : r.checks) {
        py::dict d;
        d["id"] = c.id;
        d["status"] = std::string(to_string(c.status));
        d["witnesses"] = c.witnesses;
        d["detail"] = c.detail;
        checks.append(d);
    }
    py::dict out;
    out["name"] = r.name;
    out["passed"] = r.passed();
    out["checks"] = checks;
    return out;
}

StructureConstants lie(const std::string& name)
{
    if (name == "sl2") return sl2_structure();
    if (name == "nonabelian2") return nonabelian2_structure();
    if (name.rfind("abelian:", 0) == 0) return abelian_structure(std::stoul(name.substr(8)));
    throw InvalidParams("unknown Lie algebra '" + name + "'");
}

std::vector<std::string> texts(const std::vector<Scalar>& v)
{
    std::vector<std::string> out;
    for (const auto& s : v) out.push_back(s.to_string());
    return out;
}

}  // namespace

PYBIND11_MODULE(_lcalg, m)
{
    m.doc() = "Exact computations with Lie conformal algebras";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<SpecError>(m, "SpecError", base.ptr());
    py::register_exception<TruncationExceeded>(m, "TruncationExceeded", base.ptr());
    py::register_exception<InvalidParams>(m, "InvalidParams", base.ptr());
    py::register_exception<InvalidStructure>(m, "InvalidStructure", base.ptr());

    m.def("canonical", [](const std::string& text) { return parse_poly(text).to_string(); },
          "Parse a polynomial in d, l, m, n and render it canonically.");

    py::class_<ConformalAlgebra>(m, "Algebra")
        .def_property_readonly("labels", &ConformalAlgebra::labels)
        .def_property_readonly("truncation", &ConformalAlgebra::truncation)
        .def("entry",
             [](const ConformalAlgebra& A, GenIndex i, GenIndex j) {
                 std::map<std::string, std::string> out;
                 for (const auto& [k, p] : A.entry(i, j)) out[A.labels()[k]] = p.to_string();
                 return out;
             })
        .def("check_skew", [](const ConformalAlgebra& A) { return report_dict(check_skew(A)); })
        .def("check_jacobi", [](const ConformalAlgebra& A) { return report_dict(check_jacobi(A)); })
        .def("__repr__", [](const ConformalAlgebra& A) {
            return "<Algebra with " + std::to_string(A.size()) + " generators>";
        });

    m.def("virasoro", &virasoro);
    m.def("current", [](const std::string& g) { return current(lie(g)); }, py::arg("lie"));
    m.def("vir_semidirect", [](const std::string& a, const std::string& g) {
        return vir_semidirect_current(parse_scalar(a), lie(g));
    }, py::arg("a"), py::arg("lie"));
    m.def("block", [](const std::string& p, int n) { return block(parse_scalar(p), n); }, py::arg("p"),
          py::arg("truncation"));
    m.def("map_virasoro", &map_virasoro_polynomial, py::arg("truncation"));
    m.def("algebra_from_spec", [](const std::string& text) { return parse_spec(text).algebra; });

    m.def("check_grading", [](const ConformalAlgebra& A) {
        GradeSplit s = split_I0_I1(A);
        GradedProfile p = profile_from_table(A);
        py::dict out;
        out["I0"] = s.I0;
        out["I1"] = s.I1;
        out["split"] = report_dict(s.report);
        out["b_linear"] = report_dict(check_b_linear(A));
        out["invariants"] = report_dict(p.invariants);
        std::map<int, std::string> a;
        for (const auto& [i, v] : p.a_seq) a[i] = v.to_string();
        out["a"] = a;
        return out;
    });

    m.def("weights", [](const std::string& spec_text, int degree, const std::string& module) {
        SpecFile s = parse_spec(spec_text);
        const ModuleSpec& ms = s.module(module);
        WeightAnalysis w = weight_spaces(ms.module, ms.virasoro.value_or(0), degree, ms.completely_nontrivial);
        std::vector<std::pair<std::string, std::size_t>> out;
        for (const auto& r : w.weights) out.emplace_back(r.weight.to_string(), r.dim());
        return out;
    }, py::arg("spec"), py::arg("degree"), py::arg("module") = "");

    m.def("solve_homogeneous", [](const std::string& a, const std::string& di, const std::string& dj, int k) {
        std::vector<std::string> out;
        for (const auto& f : solve_homogeneous(parse_scalar(a), parse_scalar(di), parse_scalar(dj), k).basis)
            out.push_back(f.to_string());
        return out;
    }, py::arg("a"), py::arg("delta_i"), py::arg("delta_j"), py::arg("k"));

    m.def("solve_intertwiner",
          [](const std::string& a, const std::string& b, const std::string& di, const std::string& ci,
             const std::string& dj, const std::string& cj, int degree_bound) {
              FuncEqInstance inst{parse_scalar(a),  parse_scalar(b),  parse_scalar(di), parse_scalar(ci),
                                  parse_scalar(dj), parse_scalar(cj), degree_bound, std::nullopt};
              std::vector<std::string> out;
              for (const auto& f : solve_intertwiner(inst).basis) out.push_back(f.to_string());
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("delta_i"), py::arg("c_i"), py::arg("delta_j"), py::arg("c_j"),
          py::arg("degree_bound"));

    m.def("verify_solution_table", []() { return report_dict(verify_solution_table(default_table_samples())); });

    m.def("scan_a1", [](const std::string& a1, int horizon, const std::string& rule) {
        if (rule != "degrees" && rule != "jacobi") throw InvalidParams("rule is degrees or jacobi");
        ScanResult r = scan_a1(parse_scalar(a1), horizon, rule == "jacobi" ? ScanRule::Jacobi : ScanRule::Degrees);
        py::dict out;
        out["admissible"] = r.admissible;
        out["witness_sequence"] = r.witness_sequence ? py::cast(texts(*r.witness_sequence)) : py::none();
        out["rejection_depth"] = r.rejection_depth ? py::cast(*r.rejection_depth) : py::none();
        return out;
    }, py::arg("a1"), py::arg("horizon"), py::arg("rule") = "degrees");

    m.def("farey_grid", [](int max_den, const std::string& lo, const std::string& hi) {
        return texts(farey_grid(max_den, parse_scalar(lo), parse_scalar(hi)));
    });

    m.def("smith", [](const std::string& matrix) {
        std::vector<std::vector<UniPoly>> rows;
        for (const auto& row : parse_poly_rows(matrix)) {
            rows.emplace_back();
            for (const auto& e : row) rows.back().push_back(UniPoly::from_multi(e));
        }
        PolyMatrix mx = PolyMatrix::from_rows(rows);
        SmithForm f = smith_normal_form(mx);
        TorsionSplit t = torsion_split(mx);
        py::dict out;
        out["D"] = f.D.to_string();
        out["U"] = f.U.to_string();
        out["V"] = f.V.to_string();
        std::vector<std::string> inv, tor;
        for (const auto& p : f.invariants) inv.push_back(p.to_string());
        for (const auto& p : t.torsion) tor.push_back(p.to_string());
        out["invariants"] = inv;
        out["free_rank"] = t.free_rank;
        out["torsion"] = tor;
        return out;
    });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, "Run a CLI command in-process; returns (exit code, stdout, stderr).");
}
