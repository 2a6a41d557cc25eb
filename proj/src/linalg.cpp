#include "lcalg/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lcalg {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::apply(const Vector& x) const
{
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch");
    Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero() && !x[c].is_zero()) y[r] += (*this)(r, c) * x[c];
    return y;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

Rref rref(Matrix m)
{
    Rref out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));

        Scalar inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;

        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Scalar factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m)
{
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = Scalar(1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return canonical_basis(basis, m.cols());
}

std::vector<Vector> canonical_basis(const std::vector<Vector>& vectors, std::size_t dim)
{
    if (vectors.empty()) return {};
    Rref r = rref(Matrix::from_rows(vectors, dim));
    std::vector<Vector> out;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) out.push_back(r.reduced.row(i));
    return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
    if (b.size() != m.rows()) throw std::invalid_argument("dimension mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    Rref red = rref(std::move(aug));
    if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t i = 0; i < red.pivots.size(); ++i) x[red.pivots[i]] = red.reduced(i, m.cols());
    return x;
}

std::vector<Scalar> characteristic_polynomial(const Matrix& a)
{
    if (a.rows() != a.cols()) throw std::invalid_argument("square matrix required");
    const std::size_t n = a.rows();
    // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k)/k
    std::vector<Scalar> coeffs(n + 1);
    coeffs[n] = Scalar(1);
    Matrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix next = a * mk;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += coeffs[n - k + 1];
        mk = std::move(next);
        Matrix am = a * mk;
        Scalar trace;
        for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
        coeffs[n - k] = -trace / Scalar(static_cast<long>(k));
    }
    return coeffs;
}

CoefficientSystem coefficient_system(const std::vector<MultiPoly>& columns)
{
    std::set<Exponent, GrlexDescending> mons;
    for (const auto& p : columns)
        for (const auto& [e, c] : p.terms()) mons.insert(e);

    CoefficientSystem sys;
    sys.monomials.assign(mons.begin(), mons.end());
    sys.matrix = Matrix(sys.monomials.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [e, coef] : columns[c].terms()) {
            auto it = std::lower_bound(sys.monomials.begin(), sys.monomials.end(), e, GrlexDescending{});
            sys.matrix(static_cast<std::size_t>(it - sys.monomials.begin()), c) = coef;
        }
    return sys;
}

Vector coefficient_vector(const MultiPoly& p, const std::vector<Exponent>& monomials)
{
    Vector v(monomials.size());
    for (const auto& [e, coef] : p.terms()) {
        auto it = std::lower_bound(monomials.begin(), monomials.end(), e, GrlexDescending{});
        if (it == monomials.end() || *it != e)
            throw std::invalid_argument("monomial outside the coefficient system");
        v[static_cast<std::size_t>(it - monomials.begin())] = coef;
    }
    return v;
}

std::optional<Vector> solve_combination(const std::vector<MultiPoly>& columns, const MultiPoly& rhs)
{
    std::vector<MultiPoly> all = columns;
    all.push_back(rhs);
    CoefficientSystem sys = coefficient_system(all);
    Matrix lhs(sys.matrix.rows(), columns.size());
    Vector b(sys.matrix.rows());
    for (std::size_t r = 0; r < sys.matrix.rows(); ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) lhs(r, c) = sys.matrix(r, c);
        b[r] = sys.matrix(r, columns.size());
    }
    return solve(lhs, b);
}

std::vector<Exponent> monomials_dl(int bound, bool exact_degree)
{
    std::vector<Exponent> out;
    for (int t = bound; t >= (exact_degree ? bound : 0); --t)
        for (int d = t; d >= 0; --d) out.push_back(Exponent{d, t - d, 0, 0});
    return out;
}

}  // namespace lcalg
