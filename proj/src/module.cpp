#include "lcalg/module.hpp"

#include "lcalg/errors.hpp"

#include <random>

namespace lcalg {

ConformalModule::ConformalModule(std::vector<std::string> basis, std::map<GenIndex, ActionMatrix> actions)
    : basis_(std::move(basis)), actions_(std::move(actions))
{
    const std::size_t m = basis_.size();
    for (const auto& [g, a] : actions_) {
        if (a.size() != m) throw InvalidStructure("action matrix has the wrong number of rows");
        for (const auto& row : a) {
            if (row.size() != m) throw InvalidStructure("action matrix has the wrong number of columns");
            for (const auto& p : row)
                if (!p.only_uses({Var::D, Var::L}))
                    throw InvalidStructure("action entries may only involve d and l");
        }
    }
}

const ActionMatrix& ConformalModule::action(GenIndex g) const
{
    auto it = actions_.find(g);
    if (it == actions_.end()) throw MissingAction("no action given for generator #" + std::to_string(g));
    return it->second;
}

ActionMatrix zero_action(std::size_t rank)
{
    return ActionMatrix(rank, std::vector<MultiPoly>(rank));
}

ModuleElement act_generator(const ConformalModule& M, GenIndex g, const ModuleElement& u, const MultiPoly& lambda)
{
    const ActionMatrix& a = M.action(g);
    const MultiPoly shifted = d_var() + lambda;
    ModuleElement out(M.rank());
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j].is_zero()) continue;
        MultiPoly f = substitute(u[j], Var::D, shifted);
        for (std::size_t k = 0; k < M.rank(); ++k)
            if (!a[k][j].is_zero()) out[k] += f * substitute(a[k][j], Var::L, lambda);
    }
    return out;
}

ModuleElement act(const ConformalModule& M, const GenVector& x, const ModuleElement& u, const MultiPoly& lambda)
{
    ModuleElement out(M.rank());
    const MultiPoly minus_lambda = -lambda;
    for (const auto& [g, h] : x) {
        if (h.is_zero()) continue;
        MultiPoly factor = substitute(h, Var::D, minus_lambda);
        ModuleElement part = act_generator(M, g, u, lambda);
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += factor * part[k];
    }
    return out;
}

ModuleElement basis_vector(const ConformalModule& M, std::size_t j)
{
    ModuleElement u(M.rank());
    u.at(j) = MultiPoly(1);
    return u;
}

std::string to_string(const ModuleElement& u, const std::vector<std::string>& basis)
{
    std::string out;
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k].is_zero()) continue;
        if (!out.empty()) out += "; ";
        out += (k < basis.size() ? basis[k] : "#" + std::to_string(k)) + ": " + u[k].to_string();
    }
    return out.empty() ? "0" : out;
}

namespace {

bool is_zero(const ModuleElement& u)
{
    for (const auto& p : u)
        if (!p.is_zero()) return false;
    return true;
}

ModuleElement scaled(const ModuleElement& u, const MultiPoly& f)
{
    ModuleElement out(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) out[k] = f * u[k];
    return out;
}

MultiPoly random_d_poly(std::mt19937& rng)
{
    MultiPoly p;
    std::uniform_int_distribution<long> coef(-4, 4);
    for (unsigned k = 0; k <= 2; ++k) p += Scalar(coef(rng)) * d_var().pow(k);
    return p;
}

}  // namespace

Report check_module(const ConformalAlgebra& A, const ConformalModule& M, unsigned seed)
{
    Report r;
    r.name = "module";
    for (GenIndex g = 0; g < A.size(); ++g) M.action(g);

    const MultiPoly l = l_var(), m = m_var();
    for (GenIndex a = 0; a < A.size(); ++a) {
        for (GenIndex b = 0; b < A.size(); ++b) {
            for (std::size_t j = 0; j < M.rank(); ++j) {
                std::string id = "module(" + A.labels()[a] + "," + A.labels()[b] + "," + M.basis()[j] + ")";
                if (!A.has_entry(a, b)) {
                    r.skip(id, "bracket beyond truncation");
                    continue;
                }
                ModuleElement v = basis_vector(M, j);
                ModuleElement lhs = act_generator(M, a, act_generator(M, b, v, m), l);
                ModuleElement mid = act(M, bracket_at(A, generator(a), generator(b), l), v, l + m);
                ModuleElement rhs = act_generator(M, b, act_generator(M, a, v, l), m);
                for (std::size_t k = 0; k < M.rank(); ++k) lhs[k] -= mid[k] + rhs[k];
                if (is_zero(lhs))
                    r.pass(id);
                else
                    r.fail(id, {to_string(lhs, M.basis())});
            }
        }
    }

    // Sesquilinearity on random elements: (∂x)_λ u = -λ x_λ u and
    // x_λ (∂u) = (∂+λ) x_λ u.
    std::mt19937 rng(seed);
    const MultiPoly d = d_var();
    for (int trial = 0; trial < 4 && M.rank() > 0 && A.size() > 0; ++trial) {
        GenVector x;
        ModuleElement u(M.rank());
        for (GenIndex g = 0; g < A.size(); ++g) x[g] = random_d_poly(rng);
        for (auto& p : u) p = random_d_poly(rng);
        GenVector dx = x;
        for (auto& [g, p] : dx) p *= d;
        ModuleElement base = act(M, x, u, l);
        ModuleElement left = act(M, dx, u, l);
        ModuleElement right = act(M, x, scaled(u, d), l);
        ModuleElement want_left = scaled(base, -l), want_right = scaled(base, d + l);
        std::string id = "sesquilinear(" + std::to_string(trial) + ")";
        if (left == want_left && right == want_right)
            r.pass(id);
        else
            r.fail(id, {to_string(left, M.basis()), to_string(right, M.basis())});
    }
    return r;
}

ConformalModule rank_one_vir(const Scalar& a, const Scalar& b)
{
    ConformalModule M({"v"}, {{0, {{d_var() + a * l_var() + b}}}});
    M.irreducible = !a.is_zero();
    return M;
}

ConformalModule rank_one_theorem_module(const ConformalAlgebra& A, TheoremCase which, const TheoremParams& params)
{
    if (!A.is_graded()) throw InvalidParams("the algebra must be graded");
    auto l0 = A.generator_of_grade(0);
    auto l1 = A.generator_of_grade(1);
    if (!l0 || !l1) throw InvalidParams("the algebra needs exactly one generator in grades 0 and 1");
    for (GenIndex g = 0; g < A.size(); ++g)
        if (A.generator_of_grade(*A.grade(g)) != g) throw InvalidParams("every grade must have exactly one generator");

    auto w = virasoro_weight(A, *l0, *l1);
    if (!w) throw InvalidParams("[L0 l L1] vanishes, so a_1 is undefined");
    const Scalar a1 = w->first;
    const MultiPoly vir = d_var() + params.delta * l_var() + params.c;

    std::map<GenIndex, ActionMatrix> actions;
    if (which == TheoremCase::A1NotTwo) {
        if (a1 == Scalar(2)) throw InvalidParams("this case needs a_1 != 2");
        if (!params.gamma.is_zero() && a1 != Scalar(1)) throw InvalidParams("gamma != 0 requires a_1 = 1");
        if (params.gamma.is_zero() && params.delta.is_zero()) throw InvalidParams("Delta must be nonzero when gamma = 0");
        for (GenIndex g = 0; g < A.size(); ++g) {
            int grade = *A.grade(g);
            MultiPoly p = grade == 0 ? vir : grade == 1 ? MultiPoly(params.gamma) : MultiPoly();
            actions[g] = {{p}};
        }
    } else {
        if (a1 != Scalar(2)) throw InvalidParams("this case needs a_1 = 2");
        if (params.delta.is_zero()) throw InvalidParams("Delta must be nonzero");
        if (params.ci.empty() || params.ci[0] != Scalar(1)) throw InvalidParams("c_0 must be 1");
        for (GenIndex g = 0; g < A.size(); ++g) {
            auto grade = static_cast<std::size_t>(*A.grade(g));
            if (grade >= params.ci.size())
                throw InvalidParams("no c_i given for grade " + std::to_string(grade));
            actions[g] = {{params.ci[grade] * vir}};
        }
    }
    return ConformalModule({"v"}, std::move(actions));
}

ConformalModule adjoint_module(const ConformalAlgebra& A)
{
    if (A.truncation()) throw InvalidParams("the adjoint module needs an untruncated algebra");
    std::map<GenIndex, ActionMatrix> actions;
    for (GenIndex g = 0; g < A.size(); ++g) {
        ActionMatrix a = zero_action(A.size());
        for (GenIndex j = 0; j < A.size(); ++j)
            for (const auto& [k, p] : A.entry(g, j)) a[k][j] = p;
        actions[g] = std::move(a);
    }
    return ConformalModule(A.labels(), std::move(actions));
}

ConformalModule trivial_module(const ConformalAlgebra& A, std::size_t rank)
{
    std::vector<std::string> basis;
    for (std::size_t k = 0; k < rank; ++k) basis.push_back(rank == 1 ? "v" : "v" + std::to_string(k + 1));
    std::map<GenIndex, ActionMatrix> actions;
    for (GenIndex g = 0; g < A.size(); ++g) actions[g] = zero_action(rank);
    return ConformalModule(std::move(basis), std::move(actions));
}

ConformalModule direct_sum(const ConformalModule& a, const ConformalModule& b)
{
    const std::size_t n = a.rank(), m = b.rank();
    std::vector<std::string> basis;
    for (const auto& s : a.basis()) basis.push_back(s + "'1");
    for (const auto& s : b.basis()) basis.push_back(s + "'2");
    std::map<GenIndex, ActionMatrix> actions;
    for (const auto& [g, ma] : a.actions()) {
        const ActionMatrix& mb = b.action(g);
        ActionMatrix s = zero_action(n + m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s[i][j] = ma[i][j];
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) s[n + i][n + j] = mb[i][j];
        actions[g] = std::move(s);
    }
    for (const auto& [g, mb] : b.actions()) a.action(g);
    return ConformalModule(std::move(basis), std::move(actions));
}

ActionKernel action_kernel(const ConformalAlgebra& A, const ConformalModule& M)
{
    ActionKernel out;
    std::vector<MultiPoly> flattened;
    // Flatten each matrix into one polynomial per entry, tagged by an
    // auxiliary exponent so entries never mix: entry index e goes to ν^e.
    for (GenIndex g = 0; g < A.size(); ++g) {
        const ActionMatrix& a = M.action(g);
        MultiPoly flat;
        bool zero = true;
        unsigned e = 0;
        for (const auto& row : a)
            for (const auto& p : row) {
                if (!p.is_zero()) zero = false;
                flat += p * n_var().pow(e++);
            }
        if (zero) out.zero_generators.push_back(g);
        flattened.push_back(std::move(flat));
    }
    CoefficientSystem sys = coefficient_system(flattened);
    out.combinations = nullspace(sys.matrix);
    return out;
}

}  // namespace lcalg
