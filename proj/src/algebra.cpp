#include "lcalg/algebra.hpp"

#include "lcalg/errors.hpp"
#include "lcalg/linalg.hpp"

#include <sstream>

namespace lcalg {

GenVector& accumulate(GenVector& acc, const GenVector& v, const MultiPoly& factor)
{
    for (const auto& [g, p] : v) {
        MultiPoly& slot = acc[g];
        slot += factor * p;
        if (slot.is_zero()) acc.erase(g);
    }
    return acc;
}

bool is_zero(const GenVector& v)
{
    for (const auto& [g, p] : v)
        if (!p.is_zero()) return false;
    return true;
}

std::string to_string(const GenVector& v, const std::vector<std::string>& labels)
{
    std::string out;
    for (const auto& [g, p] : v) {
        if (p.is_zero()) continue;
        if (!out.empty()) out += "; ";
        out += (g < labels.size() ? labels[g] : "#" + std::to_string(g)) + ": " + p.to_string();
    }
    return out.empty() ? "0" : out;
}

ConformalAlgebra::ConformalAlgebra(std::vector<std::string> labels, Table table, std::optional<Grading> grading)
    : labels_(std::move(labels)), table_(std::move(table)), grading_(std::move(grading))
{
    const std::size_t n = labels_.size();
    if (grading_) {
        if (grading_->grades.size() != n) throw InvalidStructure("grading must assign a grade to every generator");
        for (int g : grading_->grades)
            if (g < 0) throw InvalidStructure("grades must be non-negative");
    }
    for (auto it = table_.begin(); it != table_.end();) {
        auto [i, j] = it->first;
        if (i >= n || j >= n) throw InvalidStructure("bracket entry refers to an unknown generator");
        const std::string where = "[" + labels_[i] + " l " + labels_[j] + "]";
        if (!has_entry(i, j)) throw InvalidStructure(where + " lies beyond the truncation");
        GenVector& v = it->second;
        for (auto c = v.begin(); c != v.end();) {
            if (c->first >= n) throw InvalidStructure(where + " has an unknown target generator");
            if (!c->second.only_uses({Var::D, Var::L}))
                throw InvalidStructure(where + " involves variables other than d and l");
            if (c->second.is_zero()) {
                c = v.erase(c);
                continue;
            }
            if (grading_ && grading_->grades[c->first] != grading_->grades[i] + grading_->grades[j])
                throw InvalidStructure(where + " is not supported on the grade " +
                                       std::to_string(grading_->grades[i] + grading_->grades[j]) + " component");
            ++c;
        }
        if (v.empty())
            it = table_.erase(it);
        else
            ++it;
    }
}

std::optional<GenIndex> ConformalAlgebra::index_of(const std::string& label) const
{
    for (GenIndex g = 0; g < labels_.size(); ++g)
        if (labels_[g] == label) return g;
    return std::nullopt;
}

std::optional<int> ConformalAlgebra::grade(GenIndex g) const
{
    if (!grading_ || g >= labels_.size()) return std::nullopt;
    return grading_->grades[g];
}

std::optional<GenIndex> ConformalAlgebra::generator_of_grade(int grade) const
{
    if (!grading_) return std::nullopt;
    std::optional<GenIndex> found;
    for (GenIndex g = 0; g < labels_.size(); ++g) {
        if (grading_->grades[g] != grade) continue;
        if (found) return std::nullopt;
        found = g;
    }
    return found;
}

bool ConformalAlgebra::has_entry(GenIndex i, GenIndex j) const
{
    if (i >= labels_.size() || j >= labels_.size()) return false;
    if (!grading_ || !grading_->truncation) return true;
    return grading_->grades[i] + grading_->grades[j] <= *grading_->truncation;
}

const GenVector& ConformalAlgebra::entry(GenIndex i, GenIndex j) const
{
    static const GenVector zero;
    if (!has_entry(i, j)) {
        std::string li = i < labels_.size() ? labels_[i] : "#" + std::to_string(i);
        std::string lj = j < labels_.size() ? labels_[j] : "#" + std::to_string(j);
        throw TruncationExceeded("[" + li + " l " + lj + "] is not materialized");
    }
    auto it = table_.find({i, j});
    return it == table_.end() ? zero : it->second;
}

AlgebraElement generator(GenIndex g, const MultiPoly& coeff)
{
    AlgebraElement e;
    if (!coeff.is_zero()) e.emplace(g, coeff);
    return e;
}

GenVector bracket_at(const ConformalAlgebra& A, const GenVector& x, const GenVector& y, const MultiPoly& lambda)
{
    const MultiPoly d = d_var();
    const MultiPoly minus_lambda = -lambda;
    const MultiPoly shifted = d + lambda;
    GenVector out;
    for (const auto& [i, f] : x) {
        if (f.is_zero()) continue;
        MultiPoly left = substitute(f, Var::D, minus_lambda);
        for (const auto& [j, h] : y) {
            if (h.is_zero()) continue;
            const GenVector& p = A.entry(i, j);
            if (p.empty()) continue;
            MultiPoly factor = left * substitute(h, Var::D, shifted);
            for (const auto& [k, pk] : p) {
                GenVector term{{k, substitute(pk, Var::L, lambda)}};
                accumulate(out, term, factor);
            }
        }
    }
    return out;
}

GenVector bracket(const ConformalAlgebra& A, const AlgebraElement& x, const AlgebraElement& y)
{
    return bracket_at(A, x, y, l_var());
}

AlgebraElement jth_product(const ConformalAlgebra& A, const AlgebraElement& x, const AlgebraElement& y, int j)
{
    if (j < 0) throw std::invalid_argument("j-th product needs j >= 0");
    GenVector b = bracket(A, x, y);
    AlgebraElement out;
    const Scalar scale = factorial(static_cast<unsigned>(j));
    for (const auto& [g, p] : b) {
        MultiPoly c = coeff_of(p, Var::L, j) * scale;
        if (!c.is_zero()) out.emplace(g, std::move(c));
    }
    return out;
}

GenVector skew_defect(const ConformalAlgebra& A, GenIndex i, GenIndex j)
{
    GenVector out = A.entry(i, j);
    const MultiPoly flip = -l_var() - d_var();
    for (const auto& [k, p] : A.entry(j, i)) {
        GenVector term{{k, substitute(p, Var::L, flip)}};
        accumulate(out, term);
    }
    return out;
}

GenVector jacobi_defect(const ConformalAlgebra& A, GenIndex a, GenIndex b, GenIndex c)
{
    const MultiPoly l = l_var();
    const MultiPoly m = m_var();
    const AlgebraElement ga = generator(a), gb = generator(b), gc = generator(c);

    GenVector out = bracket_at(A, ga, bracket_at(A, gb, gc, m), l);
    accumulate(out, bracket_at(A, bracket_at(A, ga, gb, l), gc, l + m), MultiPoly(-1));
    accumulate(out, bracket_at(A, gb, bracket_at(A, ga, gc, l), m), MultiPoly(-1));
    return out;
}

namespace {

std::string pair_id(const ConformalAlgebra& A, GenIndex i, GenIndex j)
{
    return A.labels()[i] + "," + A.labels()[j];
}

}  // namespace

Report check_skew(const ConformalAlgebra& A)
{
    Report r;
    r.name = "skew";
    for (GenIndex i = 0; i < A.size(); ++i) {
        for (GenIndex j = i; j < A.size(); ++j) {
            std::string id = "skew(" + pair_id(A, i, j) + ")";
            if (!A.has_entry(i, j) || !A.has_entry(j, i)) {
                r.skip(id, "beyond truncation");
                continue;
            }
            GenVector defect = skew_defect(A, i, j);
            if (is_zero(defect))
                r.pass(id);
            else
                r.fail(id, {to_string(defect, A.labels())});
        }
    }
    return r;
}

Report check_jacobi(const ConformalAlgebra& A)
{
    Report r;
    r.name = "jacobi";
    for (GenIndex a = 0; a < A.size(); ++a) {
        for (GenIndex b = 0; b < A.size(); ++b) {
            for (GenIndex c = 0; c < A.size(); ++c) {
                std::string id = "jacobi(" + pair_id(A, a, b) + "," + A.labels()[c] + ")";
                GenVector defect;
                try {
                    defect = jacobi_defect(A, a, b, c);
                } catch (const TruncationExceeded& e) {
                    r.skip(id, e.what());
                    continue;
                }
                if (is_zero(defect))
                    r.pass(id);
                else
                    r.fail(id, {to_string(defect, A.labels())});
            }
        }
    }
    return r;
}

std::optional<std::pair<Scalar, Scalar>> virasoro_weight(const ConformalAlgebra& A, GenIndex l0, GenIndex i)
{
    const MultiPoly d = d_var(), l = l_var();
    const GenVector& vir = A.entry(l0, l0);
    if (vir.size() != 1 || vir.begin()->first != l0)
        throw NotVirasoroAtZero("[" + A.labels()[l0] + " l " + A.labels()[l0] + "] is not a multiple of " +
                                A.labels()[l0]);
    const MultiPoly& p00 = vir.begin()->second;
    auto kappa = proportionality(p00, d + 2 * l);
    if (!kappa)
        throw NotVirasoroAtZero("[" + A.labels()[l0] + " l " + A.labels()[l0] + "] = " + p00.to_string() +
                                " is not proportional to d + 2*l");

    const GenVector& v = A.entry(l0, i);
    if (is_zero(v)) return std::nullopt;
    const std::string where = "[" + A.labels()[l0] + " l " + A.labels()[i] + "]";
    if (v.size() != 1 || v.begin()->first != i) throw MalformedBracket(where + " is not a multiple of " + A.labels()[i]);
    MultiPoly p = v.begin()->second * kappa->inverse();
    if (p.total_degree().value() != 1 || !p.only_uses({Var::D, Var::L}) || p.coefficient({1, 0, 0, 0}) != Scalar(1))
        throw MalformedBracket(where + " = " + v.begin()->second.to_string() + " is not of the form d + a*l + b");
    return std::make_pair(p.coefficient({0, 1, 0, 0}), p.constant_term());
}

StructureConstants sl2_structure()
{
    // basis e, h, f: [e,f] = h, [h,e] = 2e, [h,f] = -2f
    StructureConstants c(3, std::vector<std::vector<Scalar>>(3, std::vector<Scalar>(3)));
    c[0][2][1] = 1;
    c[2][0][1] = -1;
    c[1][0][0] = 2;
    c[0][1][0] = -2;
    c[1][2][2] = -2;
    c[2][1][2] = 2;
    return c;
}

StructureConstants nonabelian2_structure()
{
    StructureConstants c(2, std::vector<std::vector<Scalar>>(2, std::vector<Scalar>(2)));
    c[0][1][1] = 1;
    c[1][0][1] = -1;
    return c;
}

StructureConstants abelian_structure(std::size_t dim)
{
    return StructureConstants(dim, std::vector<std::vector<Scalar>>(dim, std::vector<Scalar>(dim)));
}

ConformalAlgebra virasoro()
{
    ConformalAlgebra::Table t;
    t[{0, 0}] = {{0, d_var() + 2 * l_var()}};
    return ConformalAlgebra({"L"}, std::move(t));
}

namespace {

void validate_structure(const StructureConstants& g, std::size_t labels)
{
    const std::size_t n = g.size();
    if (labels != n) throw InvalidStructure("label count does not match the structure constants");
    for (const auto& row : g) {
        if (row.size() != n) throw InvalidStructure("structure constants must be n x n x n");
        for (const auto& col : row)
            if (col.size() != n) throw InvalidStructure("structure constants must be n x n x n");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k)
                if (g[a][b][k] != -g[b][a][k]) throw InvalidStructure("structure constants are not antisymmetric");
}

std::vector<std::string> default_labels(std::vector<std::string> labels, std::size_t n)
{
    if (!labels.empty()) return labels;
    if (n == 3) return {"e", "h", "f"};
    for (std::size_t k = 0; k < n; ++k) labels.push_back("x" + std::to_string(k + 1));
    return labels;
}

GenVector constant_vector(const std::vector<Scalar>& coords, std::size_t offset)
{
    GenVector v;
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (!coords[k].is_zero()) v.emplace(k + offset, MultiPoly(coords[k]));
    return v;
}

}  // namespace

ConformalAlgebra current(const StructureConstants& g, std::vector<std::string> labels)
{
    labels = default_labels(std::move(labels), g.size());
    validate_structure(g, labels.size());
    ConformalAlgebra::Table t;
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b) {
            GenVector v = constant_vector(g[a][b], 0);
            if (!v.empty()) t[{a, b}] = std::move(v);
        }
    return ConformalAlgebra(std::move(labels), std::move(t));
}

ConformalAlgebra vir_semidirect_current(const Scalar& a, const StructureConstants& g, std::vector<std::string> labels)
{
    labels = default_labels(std::move(labels), g.size());
    validate_structure(g, labels.size());
    const MultiPoly d = d_var(), l = l_var();
    ConformalAlgebra::Table t;
    t[{0, 0}] = {{0, d + 2 * l}};
    for (std::size_t x = 1; x <= g.size(); ++x) {
        t[{0, x}] = {{x, d + a * l}};
        t[{x, 0}] = {{x, (a - 1) * d + a * l}};
        for (std::size_t y = 1; y <= g.size(); ++y) {
            GenVector v = constant_vector(g[x - 1][y - 1], 1);
            if (!v.empty()) t[{x, y}] = std::move(v);
        }
    }
    labels.insert(labels.begin(), "L");
    return ConformalAlgebra(std::move(labels), std::move(t));
}

ConformalAlgebra block(const Scalar& p, int truncation)
{
    if (p.is_zero()) throw InvalidStructure("block algebra needs p != 0");
    if (truncation < 0) throw InvalidStructure("truncation must be non-negative");
    const MultiPoly d = d_var(), l = l_var();
    std::vector<std::string> labels;
    Grading grading{{}, truncation};
    ConformalAlgebra::Table t;
    for (int i = 0; i <= truncation; ++i) {
        labels.push_back("L" + std::to_string(i));
        grading.grades.push_back(i);
        for (int j = 0; i + j <= truncation; ++j)
            t[{GenIndex(i), GenIndex(j)}] = {{GenIndex(i + j), (Scalar(i) + p) * d + (Scalar(i + j) + 2 * p) * l}};
    }
    return ConformalAlgebra(std::move(labels), std::move(t), std::move(grading));
}

CommutativeAlgebra truncated_polynomial_algebra(int n)
{
    if (n < 1) throw InvalidStructure("C[T]/(T^n) needs n >= 1");
    CommutativeAlgebra A;
    A.mult = abelian_structure(static_cast<std::size_t>(n));
    A.grades = std::vector<int>();
    for (int i = 0; i < n; ++i) {
        A.labels.push_back(i == 0 ? "1" : i == 1 ? "T" : "T^" + std::to_string(i));
        A.grades->push_back(i);
        for (int j = 0; i + j < n; ++j) A.mult[i][j][i + j] = 1;
    }
    return A;
}

ConformalAlgebra map_virasoro(const CommutativeAlgebra& A)
{
    const std::size_t n = A.labels.size();
    if (n == 0) throw InvalidStructure("the commutative algebra is empty");
    if (A.mult.size() != n) throw InvalidStructure("multiplication table must be n x n x n");
    for (const auto& row : A.mult) {
        if (row.size() != n) throw InvalidStructure("multiplication table must be n x n x n");
        for (const auto& col : row)
            if (col.size() != n) throw InvalidStructure("multiplication table must be n x n x n");
    }
    const auto& m = A.mult;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (m[x][y][z] != m[y][x][z]) throw InvalidStructure("multiplication is not commutative");
    // (xy)w = x(yw), coordinatewise
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t w = 0; w < n; ++w)
                for (std::size_t z = 0; z < n; ++z) {
                    Scalar lhs, rhs;
                    for (std::size_t u = 0; u < n; ++u) {
                        lhs += m[x][y][u] * m[u][w][z];
                        rhs += m[y][w][u] * m[x][u][z];
                    }
                    if (lhs != rhs) throw InvalidStructure("multiplication is not associative");
                }
    // unit: sum_x u_x m[x][y][z] = delta_yz for all y, z
    Matrix sys(n * n, n);
    Vector rhs(n * n);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
            for (std::size_t x = 0; x < n; ++x) sys(y * n + z, x) = m[x][y][z];
            rhs[y * n + z] = y == z ? 1 : 0;
        }
    if (!solve(sys, rhs)) throw InvalidStructure("the commutative algebra has no unit");

    const MultiPoly vir = d_var() + 2 * l_var();
    std::vector<std::string> labels;
    for (const auto& s : A.labels) labels.push_back("L_" + s);
    ConformalAlgebra::Table t;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            GenVector v;
            for (std::size_t z = 0; z < n; ++z)
                if (!m[x][y][z].is_zero()) v.emplace(z, m[x][y][z] * vir);
            if (!v.empty()) t[{x, y}] = std::move(v);
        }
    std::optional<Grading> grading;
    if (A.grades) grading = Grading{*A.grades, std::nullopt};
    return ConformalAlgebra(std::move(labels), std::move(t), std::move(grading));
}

ConformalAlgebra map_virasoro_polynomial(int truncation)
{
    if (truncation < 0) throw InvalidStructure("truncation must be non-negative");
    const MultiPoly vir = d_var() + 2 * l_var();
    std::vector<std::string> labels;
    Grading grading{{}, truncation};
    ConformalAlgebra::Table t;
    for (int i = 0; i <= truncation; ++i) {
        labels.push_back(i == 0 ? "L_1" : i == 1 ? "L_T" : "L_T^" + std::to_string(i));
        grading.grades.push_back(i);
        for (int j = 0; i + j <= truncation; ++j) t[{GenIndex(i), GenIndex(j)}] = {{GenIndex(i + j), vir}};
    }
    return ConformalAlgebra(std::move(labels), std::move(t), std::move(grading));
}

}  // namespace lcalg
