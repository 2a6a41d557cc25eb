#include "lcalg/grading.hpp"

#include "lcalg/errors.hpp"
#include "lcalg/funceq.hpp"
#include "lcalg/linalg.hpp"

#include <algorithm>
#include <set>

namespace lcalg {

namespace {

const MultiPoly& D() { static const MultiPoly v = d_var(); return v; }
const MultiPoly& L() { static const MultiPoly v = l_var(); return v; }
const MultiPoly& M() { static const MultiPoly v = m_var(); return v; }

MultiPoly at_shift_l_mu(const MultiPoly& f) { return substitute(f, {{Var::D, D() + L()}, {Var::L, M()}}); }  // f(∂+λ,μ)
MultiPoly at_shift_mu_l(const MultiPoly& f) { return substitute(f, Var::D, D() + M()); }                       // f(∂+μ,λ)
MultiPoly at_mu(const MultiPoly& f) { return substitute(f, Var::L, M()); }                                    // f(∂,μ)
MultiPoly at_sum(const MultiPoly& f) { return substitute(f, Var::L, L() + M()); }                             // f(∂,λ+μ)
MultiPoly at_outer(const MultiPoly& f) { return substitute(f, Var::D, -L() - M()); }                          // f(-λ-μ,λ)
MultiPoly skew_image(const MultiPoly& f) { return -substitute(f, Var::L, -L() - D()); }                       // -f(∂,-λ-∂)

// One generator per grade, p_ij read off as a single polynomial.
class GradedView {
public:
    explicit GradedView(const ConformalAlgebra& A) : A_(A)
    {
        if (!A.is_graded()) throw InvalidParams("algebra is not graded");
        if (A.truncation()) {
            top_ = *A.truncation();
        } else {
            top_ = 0;
            for (GenIndex g = 0; g < A.size(); ++g) top_ = std::max(top_, *A.grade(g));
        }
        for (int i = 0; i <= top_; ++i) {
            auto g = A.generator_of_grade(i);
            if (!g) throw InvalidParams("grade " + std::to_string(i) + " has no unique generator");
            gens_.push_back(*g);
        }
        if (gens_.size() != A.size()) throw InvalidParams("generators outside grades 0.." + std::to_string(top_));
        // throws NotVirasoroAtZero unless p_00 = κ(∂+2λ)
        virasoro_weight(A, gens_[0], gens_[0]);
    }

    int top() const { return top_; }
    bool in_range(int i, int j) const { return i + j <= top_; }

    MultiPoly p(int i, int j) const
    {
        const GenVector& e = A_.entry(gens_[i], gens_[j]);
        auto it = e.find(gens_[i + j]);
        return it == e.end() ? MultiPoly() : it->second;
    }

    /// (a_i, b_i), or nothing when p_0i = 0.
    std::optional<std::pair<Scalar, Scalar>> weight(int i) const { return virasoro_weight(A_, gens_[0], gens_[i]); }

    const std::string& label(int i) const { return A_.labels()[gens_[i]]; }

private:
    const ConformalAlgebra& A_;
    int top_ = 0;
    std::vector<GenIndex> gens_;
};

std::string pair_id(const char* what, int i, int j)
{
    return std::string(what) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

GradeSplit split_I0_I1(const ConformalAlgebra& A)
{
    GradedView V(A);
    GradeSplit out;
    out.report.name = "split";
    std::vector<bool> in0(V.top() + 1);
    for (int i = 0; i <= V.top(); ++i) {
        in0[i] = !V.p(0, i).is_zero();
        (in0[i] ? out.I0 : out.I1).push_back(i);
    }

    for (int i = 0; i <= V.top(); ++i)
        for (int j = 0; i + j <= V.top(); ++j) {
            MultiPoly pij = V.p(i, j);
            if (in0[i] && !in0[j]) {
                std::string id = pair_id("G0-G1", i, j);
                if (pij.is_zero()) {
                    out.report.pass(id);
                    continue;
                }
                MultiPoly defect = at_shift_l_mu(pij) * V.p(0, i + j) - at_outer(V.p(0, i)) * at_sum(pij);
                out.report.fail(id, {pij.to_string(), defect.to_string()}, "p_ij and its Jacobi defect with L_0");
            } else if (!in0[i] && in0[j]) {
                std::string id = pair_id("G1-G0", i, j);
                if (pij.is_zero())
                    out.report.pass(id);
                else
                    out.report.fail(id, {pij.to_string()});
            } else if (in0[i]) {
                std::string id = pair_id("I0-closed", i, j);
                if (pij.is_zero() || in0[i + j])
                    out.report.pass(id);
                else
                    out.report.fail(id, {pij.to_string()}, "grade " + std::to_string(i + j) + " is in I1");
            } else {
                std::string id = pair_id("G1-subalgebra", i, j);
                if (pij.is_zero() || !in0[i + j])
                    out.report.pass(id);
                else
                    out.report.fail(id, {pij.to_string()}, "grade " + std::to_string(i + j) + " is in I0");
            }
        }
    return out;
}

Report check_b_linear(const ConformalAlgebra& A)
{
    GradedView V(A);
    Report r;
    r.name = "b-linear";
    if (V.top() < 1) throw HypothesisViolated("no grade 1 generator within the truncation");
    for (int i = 0; i + 1 <= V.top(); ++i)
        if (V.p(1, i).is_zero()) throw HypothesisViolated("[" + V.label(1) + " λ " + V.label(i) + "] = 0");

    auto w1 = V.weight(1);
    for (int i = 0; i <= V.top(); ++i) {
        std::string id = "b_" + std::to_string(i) + " = " + std::to_string(i) + "*b_1";
        auto wi = V.weight(i);
        if (!wi || !w1) {
            r.fail(id, {}, "p_0" + std::to_string(wi ? 1 : i) + " = 0");
            continue;
        }
        Scalar expected = Scalar(i) * w1->second;
        if (wi->second == expected)
            r.pass(id, "b = " + wi->second.to_string());
        else
            r.fail(id, {wi->second.to_string()}, "expected " + expected.to_string());
    }
    return r;
}

GradedProfile profile_from_table(const ConformalAlgebra& A)
{
    GradedView V(A);
    GradedProfile out;
    out.invariants.name = "profile";
    for (int i = 0; i <= V.top(); ++i)
        if (auto w = V.weight(i)) {
            out.a_seq[i] = w->first;
            out.b_seq[i] = w->second;
        }
    for (int i = 0; i <= V.top(); ++i)
        for (int j = 0; i + j <= V.top(); ++j) {
            MultiPoly pij = V.p(i, j);
            std::optional<int> deg;
            if (!pij.is_zero()) deg = pij.degree(Var::L).value();
            out.deg_choices[{i, j}] = deg;
        }

    auto a_of = [&](int i) -> const Scalar* {
        auto it = out.a_seq.find(i);
        return it == out.a_seq.end() ? nullptr : &it->second;
    };

    for (int j = 0; j + 1 <= V.top(); ++j) {
        const std::optional<int>& deg = out.deg_choices[{1, j}];
        if (!deg) continue;
        std::string id = "a_" + std::to_string(j + 1) + " = a_1 + a_" + std::to_string(j) + " - 1 - deg p_1" +
                         std::to_string(j);
        const Scalar *a1 = a_of(1), *aj = a_of(j), *an = a_of(j + 1);
        if (!a1 || !aj || !an) {
            out.invariants.skip(id, "a weight is undefined (p_0i = 0)");
            continue;
        }
        if (an->is_zero()) {
            out.invariants.skip(id, "a_" + std::to_string(j + 1) + " = 0");
            continue;
        }
        Scalar rhs = *a1 + *aj - 1 - Scalar(*deg);
        if (*an == rhs)
            out.invariants.pass(id);
        else
            out.invariants.fail(id, {an->to_string(), rhs.to_string()});
    }

    for (const auto& [ij, deg] : out.deg_choices) {
        if (!deg) continue;
        auto [i, j] = ij;
        std::string id = "deg p_" + std::to_string(i) + "," + std::to_string(j) + " = a_i + a_j - a_i+j - 1";
        const Scalar *ai = a_of(i), *aj = a_of(j), *an = a_of(i + j);
        if (!ai || !aj || !an) {
            out.invariants.skip(id, "a weight is undefined (p_0i = 0)");
            continue;
        }
        if (an->is_zero()) {
            out.invariants.skip(id, "a_i+j = 0");
            continue;
        }
        Scalar rhs = *ai + *aj - *an - 1;
        if (rhs == Scalar(*deg))
            out.invariants.pass(id);
        else
            out.invariants.fail(id, {std::to_string(*deg), rhs.to_string()});
    }
    return out;
}

namespace {

// Depth-first construction of a graded table, one grade at a time.
class Scanner {
public:
    Scanner(const Scalar& a1, int horizon, ScanRule rule) : a1_(a1), horizon_(horizon), rule_(rule) {}

    ScanResult run()
    {
        ScanResult out;
        out.a1 = a1_;
        out.horizon = horizon_;
        if (!a1_.is_real()) {
            out.rejection_depth = 0;
            return out;
        }
        a_ = {Scalar(2), a1_};
        set(0, 0, D() + 2 * L());
        set(0, 1, D() + a1_ * L());
        set(1, 0, skew_image(p(0, 1)));
        bool ok = grade_consistent(0) && grade_consistent(1) && distinct_ok();
        if (ok && (horizon_ <= 1 || extend(1))) {
            out.admissible = true;
            out.witness_sequence = a_;
            out.witness_degrees = degrees_;
            if (horizon_ <= 1) out.witness_sequence->resize(static_cast<std::size_t>(std::max(horizon_, 0)) + 1);
            if (rule_ == ScanRule::Jacobi) out.witness_table = table_algebra(static_cast<int>(out.witness_sequence->size()) - 1);
        } else {
            out.rejection_depth = deepest_;
        }
        return out;
    }

private:
    const MultiPoly& p(int i, int j) const { return table_.at({i, j}); }

    ConformalAlgebra table_algebra(int top) const
    {
        std::vector<std::string> labels;
        Grading grading;
        for (int i = 0; i <= top; ++i) {
            labels.push_back("L" + std::to_string(i));
            grading.grades.push_back(i);
        }
        grading.truncation = top;
        ConformalAlgebra::Table t;
        for (const auto& [ij, f] : table_)
            if (ij.first + ij.second <= top && !f.is_zero())
                t[{GenIndex(ij.first), GenIndex(ij.second)}] = GenVector{{GenIndex(ij.first + ij.second), f}};
        return ConformalAlgebra(std::move(labels), std::move(t), std::move(grading));
    }
    void set(int i, int j, MultiPoly f) { table_[{i, j}] = std::move(f); }

    bool distinct_ok() const
    {
        std::vector<Scalar> seen;
        for (std::size_t i = 1; i < a_.size(); ++i)
            if (std::find(seen.begin(), seen.end(), a_[i]) == seen.end()) seen.push_back(a_[i]);
        // a_1 alone is one value, so the bound never drops below 1
        return static_cast<int>(seen.size()) <= std::max(1, horizon_ / 2);
    }

    bool grade_consistent(int s) const
    {
        for (int i = 0; i <= s; ++i)
            if (!(p(i, s - i) - skew_image(p(s - i, i))).is_zero()) return false;
        for (int i = 0; i <= s; ++i)
            for (int j = 0; i + j <= s; ++j) {
                int l = s - i - j;
                MultiPoly defect = at_shift_l_mu(p(j, l)) * p(i, j + l) - at_shift_mu_l(p(i, l)) * at_mu(p(j, i + l)) -
                                   at_outer(p(i, j)) * at_sum(p(i + j, l));
                if (!defect.is_zero()) return false;
            }
        return true;
    }

    // p_ij from p_1,i-1(-λ-μ,λ) p_ij(∂,λ+μ)
    //   = p_i-1,j(∂+λ,μ) p_1,i+j-1(∂,λ) - p_1j(∂+μ,λ) p_i-1,j+1(∂,μ).
    std::optional<MultiPoly> derive(int i, int j) const
    {
        MultiPoly rhs = at_shift_l_mu(p(i - 1, j)) * p(1, i + j - 1) - at_shift_mu_l(p(1, j)) * at_mu(p(i - 1, j + 1));
        if (rhs.is_zero()) return MultiPoly();
        MultiPoly factor = at_outer(p(1, i - 1));
        int deg = rhs.total_degree().value() - factor.total_degree().value();
        if (deg < 0) return std::nullopt;
        std::vector<Exponent> monos = monomials_dl(deg, true);
        std::vector<MultiPoly> columns;
        for (const auto& e : monos) columns.push_back(factor * at_sum(MultiPoly::monomial(e)));
        auto x = solve_combination(columns, rhs);
        if (!x) return std::nullopt;
        MultiPoly f;
        for (std::size_t c = 0; c < monos.size(); ++c)
            if (!(*x)[c].is_zero()) f += MultiPoly::monomial(monos[c], (*x)[c]);
        return f;
    }

    bool extend(int n)
    {
        deepest_ = std::max(deepest_, n);
        for (int k = 0; k <= 3; ++k) {
            Scalar next = a1_ + a_[n] - 1 - Scalar(k);
            if (next.is_zero()) continue;
            SolutionBasis sols = solve_homogeneous(a1_, next, a_[n], k);
            for (const auto& f : sols.basis) {
                if (try_grade(n, next, k, f)) return true;
                if (rule_ == ScanRule::Degrees) break;  // only the degree matters
            }
        }
        return false;
    }

    bool try_grade(int n, const Scalar& next, int k, const MultiPoly& f)
    {
        const int s = n + 1;
        auto saved = table_;
        a_.push_back(next);
        degrees_.push_back(k);
        auto undo = [&] {
            table_ = std::move(saved);
            a_.pop_back();
            degrees_.pop_back();
            return false;
        };
        if (!distinct_ok()) return undo();
        if (rule_ == ScanRule::Degrees) {
            if (n == 1 && k % 2 == 0) return undo();
            return finish(s) || undo();
        }
        set(0, s, D() + next * L());
        set(1, n, f);
        for (int i = 2; i <= s; ++i) {
            auto q = derive(i, s - i);
            if (!q) return undo();
            set(i, s - i, *q);
        }
        if (!grade_consistent(s)) return undo();
        return finish(s) || undo();
    }

    bool finish(int s)
    {
        deepest_ = std::max(deepest_, s);
        return s >= horizon_ || extend(s);
    }

    Scalar a1_;
    int horizon_;
    ScanRule rule_;
    std::vector<Scalar> a_;
    std::vector<int> degrees_;
    std::map<std::pair<int, int>, MultiPoly> table_;
    int deepest_ = 1;
};

}  // namespace

ScanResult scan_a1(const Scalar& a1, int horizon, ScanRule rule)
{
    if (horizon < 0) throw InvalidParams("horizon must be non-negative");
    return Scanner(a1, horizon, rule).run();
}

std::vector<Scalar> farey_grid(int max_den, const Scalar& lo, const Scalar& hi)
{
    if (max_den < 1) throw InvalidParams("denominator bound must be positive");
    if (!lo.is_real() || !hi.is_real()) throw InvalidParams("grid bounds must be real");
    std::set<mpq_class> values;
    for (int n = 1; n <= max_den; ++n) {
        mpz_class m_lo = lo.re().get_num() * n;
        mpz_class m = m_lo / lo.re().get_den();  // truncates toward zero
        for (m -= 1;; ++m) {
            mpq_class v(m, n);
            v.canonicalize();
            if (v > hi.re()) break;
            if (v >= lo.re()) values.insert(v);
        }
    }
    std::vector<Scalar> out;
    for (const auto& v : values) out.emplace_back(v);
    return out;
}

bool in_admissible_list(const Scalar& a1, int max_p, int max_q)
{
    if (a1 == Scalar(2)) return true;
    for (int p = 1; p <= max_p; ++p)
        if (a1 == Scalar(2) - Scalar::rational(1, p)) return true;
    for (int q = 1; q <= max_q; q += 2)
        if (a1 == Scalar(2) - Scalar::rational(2, q)) return true;
    return false;
}

}  // namespace lcalg
