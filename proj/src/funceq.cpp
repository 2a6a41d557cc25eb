#include "lcalg/funceq.hpp"

#include "lcalg/errors.hpp"
#include "lcalg/linalg.hpp"

namespace lcalg {

namespace {

const MultiPoly& D() { static const MultiPoly v = d_var(); return v; }
const MultiPoly& L() { static const MultiPoly v = l_var(); return v; }
const MultiPoly& M() { static const MultiPoly v = m_var(); return v; }

// f(∂,λ+μ), f(∂+λ,μ), f(∂,μ)
MultiPoly at_sum(const MultiPoly& f) { return substitute(f, Var::L, L() + M()); }
MultiPoly at_shifted(const MultiPoly& f) { return substitute(f, {{Var::D, D() + L()}, {Var::L, M()}}); }
MultiPoly at_mu(const MultiPoly& f) { return substitute(f, Var::L, M()); }

using Residual = MultiPoly (*)(const FuncEqInstance&, const MultiPoly&);

SolutionBasis solve_linear(const FuncEqInstance& inst, Residual residual)
{
    if (inst.degree_bound < 0) throw InvalidParams("degree bound must be non-negative");
    std::vector<Exponent> unknowns = inst.homogeneous_degree
                                         ? monomials_dl(*inst.homogeneous_degree, true)
                                         : monomials_dl(inst.degree_bound);
    if (inst.homogeneous_degree && *inst.homogeneous_degree < 0)
        throw InvalidParams("homogeneous degree must be non-negative");
    std::vector<MultiPoly> columns;
    columns.reserve(unknowns.size());
    for (const auto& e : unknowns) columns.push_back(residual(inst, MultiPoly::monomial(e)));
    CoefficientSystem sys = coefficient_system(columns);

    SolutionBasis out;
    for (const auto& v : nullspace(sys.matrix)) {
        MultiPoly f;
        for (std::size_t c = 0; c < unknowns.size(); ++c)
            if (!v[c].is_zero()) f += MultiPoly::monomial(unknowns[c], v[c]);
        out.basis.push_back(std::move(f));
    }
    return out;
}

MultiPoly homogeneous_of(const FuncEqInstance& inst, const MultiPoly& f)
{
    return homogeneous_residual(inst.a, inst.delta_i, inst.delta_j, f);
}

}  // namespace

MultiPoly intertwiner_residual(const FuncEqInstance& inst, const MultiPoly& f)
{
    MultiPoly lhs = (-L() - M() + inst.a * L() + inst.b) * at_sum(f);
    MultiPoly rhs = at_shifted(f) * (D() + inst.delta_i * L() + inst.c_i) -
                    (D() + M() + inst.delta_j * L() + inst.c_j) * at_mu(f);
    return lhs - rhs;
}

MultiPoly homogeneous_residual(const Scalar& a, const Scalar& delta_i, const Scalar& delta_j, const MultiPoly& f)
{
    MultiPoly lhs = (-L() + a * L() - M()) * at_sum(f);
    MultiPoly rhs = at_shifted(f) * (D() + delta_i * L()) - (D() + M() + delta_j * L()) * at_mu(f);
    return lhs - rhs;
}

MultiPoly bcsx_residual(const FuncEqInstance& inst, const MultiPoly& q)
{
    MultiPoly lhs = (-L() - M() + inst.a * L()) * at_sum(q);
    MultiPoly rhs = substitute(q, Var::D, D() + M()) * (D() + inst.delta_i * L() + inst.c_i) -
                    (D() + M() + inst.delta_j * L() + inst.c_j) * at_mu(q);
    return lhs - rhs;
}

SolutionBasis solve_intertwiner(const FuncEqInstance& inst) { return solve_linear(inst, intertwiner_residual); }

SolutionBasis solve_homogeneous(const Scalar& a, const Scalar& delta_i, const Scalar& delta_j, int k)
{
    FuncEqInstance inst;
    inst.a = a;
    inst.delta_i = delta_i;
    inst.delta_j = delta_j;
    inst.degree_bound = k;
    inst.homogeneous_degree = k;
    return solve_linear(inst, homogeneous_of);
}

SolutionBasis bcsx_variant_solver(const FuncEqInstance& inst) { return solve_linear(inst, bcsx_residual); }

MultiPoly top_homogeneous_part(const MultiPoly& f)
{
    if (f.is_zero()) return f;
    return homogeneous_part(f, f.total_degree().value());
}

DegreeOffset degree_offset(const MultiPoly& f, const Scalar& a, const Scalar& delta_i, const Scalar& delta_j)
{
    if (f.is_zero()) throw NotASolution("the zero polynomial has no degree offset");
    MultiPoly defect = homogeneous_residual(a, delta_i, delta_j, f);
    if (!defect.is_zero()) throw NotASolution(f.to_string() + " leaves defect " + defect.to_string());
    DegreeOffset out;
    out.expected = a + delta_j - delta_i - 1;
    out.deg_lambda = f.degree(Var::L).value();
    out.total_degree = f.total_degree().value();
    out.holds = out.expected == Scalar(out.deg_lambda);
    return out;
}

namespace {

std::optional<RowParams> row_1a(const Scalar& a, const Scalar& di)
{
    if (a == Scalar(1) || di.is_zero()) return std::nullopt;
    return RowParams{a, di, di + 1 - a};
}

std::optional<RowParams> row_1b(const Scalar& a, const Scalar& di)
{
    if (a == Scalar(1) || di.is_zero()) return std::nullopt;
    return RowParams{a, di, di + 2 - a};
}

std::optional<RowParams> row_1c(const Scalar& a, const Scalar&)
{
    if (a == Scalar(1) || a == Scalar(2)) return std::nullopt;
    return RowParams{a, a - 2, Scalar(1)};
}

// k = a + Δ_j - Δ_i - 1 = 3 pins a to 5/3
std::optional<RowParams> row_1d(const Scalar&, const Scalar&)
{
    return RowParams{Scalar::rational(5, 3), Scalar::rational(-2, 3), Scalar::rational(5, 3)};
}

std::optional<RowParams> row_2a(const Scalar& di, const Scalar&)
{
    if (di.is_zero()) return std::nullopt;
    return RowParams{Scalar(1), di, di};
}

std::optional<RowParams> row_2b(const Scalar& di, const Scalar&)
{
    if (di.is_zero()) return std::nullopt;
    return RowParams{Scalar(1), di, di + 1};
}

std::optional<RowParams> row_2c(const Scalar& di, const Scalar&)
{
    if (di.is_zero()) return std::nullopt;
    return RowParams{Scalar(1), di, di + 2};
}

// λ(∂²+3∂λ+2λ²) solves only at Δ_j = 1, Δ_i = -2; at Δ_j = 2, Δ_i = -1
// there is no degree 3 solution (see printed_row_2d_params).
std::optional<RowParams> row_2d(const Scalar&, const Scalar&)
{
    return RowParams{Scalar(1), Scalar(-2), Scalar(1)};
}

MultiPoly sol_one(const Scalar&, const Scalar&) { return MultiPoly(1); }

MultiPoly sol_1b(const Scalar& a, const Scalar& di) { return D() - di / (1 - a) * L(); }

MultiPoly sol_1c(const Scalar& a, const Scalar& di)
{
    return D().pow(2) - (1 + 2 * di) / (1 - a) * D() * L() - di / (1 - a) * L().pow(2);
}

MultiPoly sol_1d(const Scalar&, const Scalar&)
{
    const Scalar h = Scalar::rational(3, 2);
    return D().pow(3) + h * D().pow(2) * L() - h * D() * L().pow(2) - L().pow(3);
}

MultiPoly sol_2b(const Scalar&, const Scalar&) { return L(); }

MultiPoly sol_2c(const Scalar&, const Scalar& di) { return L() * (D() - di * L()); }

MultiPoly sol_2d(const Scalar&, const Scalar&) { return L() * (D().pow(2) + 3 * D() * L() + 2 * L().pow(2)); }

}  // namespace

RowParams printed_row_2d_params() { return RowParams{Scalar(1), Scalar(-1), Scalar(2)}; }

const std::vector<TableRow>& solution_table()
{
    static const std::vector<TableRow> rows{
        {"1a", 0, 2, row_1a, sol_one}, {"1b", 1, 2, row_1b, sol_1b}, {"1c", 2, 1, row_1c, sol_1c},
        {"1d", 3, 0, row_1d, sol_1d},  {"2a", 0, 1, row_2a, sol_one}, {"2b", 1, 1, row_2b, sol_2b},
        {"2c", 2, 1, row_2c, sol_2c},  {"2d", 3, 0, row_2d, sol_2d},
    };
    return rows;
}

std::vector<Scalar> default_table_samples()
{
    const Scalar i = Scalar::imaginary_unit();
    return {Scalar(3), Scalar::rational(1, 2), Scalar(-2), Scalar::rational(2, 3) + i, Scalar::rational(-5, 4),
            Scalar(1) - 2 * i};
}

std::vector<Scalar> default_perturbations()
{
    return {Scalar::rational(1, 2), Scalar(-1), Scalar(3), Scalar::rational(1, 5) + Scalar::imaginary_unit(),
            Scalar::rational(-7, 3)};
}

namespace {

TableCheck run_check(const TableRow& row, const RowParams& p, bool perturbed)
{
    TableCheck c;
    c.row = row.id;
    c.perturbed = perturbed;
    c.a = p.a;
    c.delta_i = p.delta_i;
    c.delta_j = p.delta_j;
    c.k = row.k;
    c.expected_dim = perturbed ? 0 : 1;
    SolutionBasis sb = solve_homogeneous(p.a, p.delta_i, p.delta_j, row.k);
    c.actual_dim = sb.dimension();
    if (!perturbed) {
        MultiPoly stated = row.solution(p.a, p.delta_i);
        c.stated_solves = homogeneous_residual(p.a, p.delta_i, p.delta_j, stated).is_zero();
        c.matches_stated = sb.dimension() == 1 && proportionality(stated, sb.basis[0]).has_value();
    }
    for (const auto& f : sb.basis)
        if (!degree_offset(f, p.a, p.delta_i, p.delta_j).holds) c.offset_holds = false;
    return c;
}

}  // namespace

std::vector<TableCheck> verify_solution_table_checks(const std::vector<Scalar>& samples,
                                                     const std::vector<Scalar>& perturbations)
{
    std::vector<TableCheck> out;
    for (const auto& row : solution_table()) {
        std::vector<RowParams> instances;
        if (row.free_params == 0) {
            instances.push_back(*row.instantiate(Scalar(), Scalar()));
        } else if (row.free_params == 1) {
            for (const auto& s : samples)
                if (auto p = row.instantiate(s, Scalar())) instances.push_back(*p);
        } else {
            for (const auto& s : samples)
                for (const auto& t : samples)
                    if (auto p = row.instantiate(s, t)) instances.push_back(*p);
        }
        for (const auto& p : instances) {
            out.push_back(run_check(row, p, false));
            for (const auto& shift : perturbations) {
                if (shift.is_zero()) continue;
                RowParams q = p;
                q.delta_j += shift;
                out.push_back(run_check(row, q, true));
            }
        }
    }
    return out;
}

Report to_report(const std::vector<TableCheck>& checks)
{
    Report r;
    r.name = "solution-table";
    for (const auto& c : checks) {
        std::string id = "row " + c.row + (c.perturbed ? " perturbed" : "") + " a=" + c.a.to_string() +
                         " di=" + c.delta_i.to_string() + " dj=" + c.delta_j.to_string();
        std::string detail = "k=" + std::to_string(c.k) + " expected dim " + std::to_string(c.expected_dim) +
                             ", got " + std::to_string(c.actual_dim);
        if (c.passed()) {
            r.pass(id, detail);
            continue;
        }
        std::vector<std::string> why;
        if (c.expected_dim != c.actual_dim) why.push_back("dimension mismatch");
        if (!c.stated_solves) why.push_back("stated solution leaves a defect");
        if (!c.matches_stated) why.push_back("solver basis differs from the stated solution");
        if (!c.offset_holds) why.push_back("degree offset violated");
        r.fail(id, why, detail);
    }
    return r;
}

Report verify_solution_table(const std::vector<Scalar>& samples)
{
    return to_report(verify_solution_table_checks(samples, default_perturbations()));
}

}  // namespace lcalg
