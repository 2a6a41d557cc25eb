#pragma once

#include "lcalg/poly.hpp"
#include "lcalg/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lcalg {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Scalar.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    Vector row(std::size_t r) const;
    Vector apply(const Vector& x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with leading ones, pivots chosen left to right.
Rref rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Nullspace basis in canonical form: the basis vectors, read as rows, are
/// themselves in reduced row echelon form (each has a leading one).
std::vector<Vector> nullspace(const Matrix& m);

/// The unique RREF basis of span(vectors).
std::vector<Vector> canonical_basis(const std::vector<Vector>& vectors, std::size_t dim);

/// Some solution of m x = b, or nothing if the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Characteristic polynomial det(x I - m) of a square matrix, coefficients
/// from the constant term upward (Faddeev-LeVerrier).
std::vector<Scalar> characteristic_polynomial(const Matrix& m);

/// Coefficient matching. Each column polynomial is expanded over the union of
/// its monomials; the result maps unknown coefficients to the coefficient of
/// every monomial in the grlex-descending order of `monomials`.
struct CoefficientSystem {
    std::vector<Exponent> monomials;
    Matrix matrix;
};

CoefficientSystem coefficient_system(const std::vector<MultiPoly>& columns);

/// Coefficients of p aligned to `monomials`; throws std::invalid_argument if
/// p has a monomial outside the list.
Vector coefficient_vector(const MultiPoly& p, const std::vector<Exponent>& monomials);

/// Scalars x with sum_c x_c * columns[c] == rhs, if any.
std::optional<Vector> solve_combination(const std::vector<MultiPoly>& columns, const MultiPoly& rhs);

/// Monomials in (∂, λ) of total degree <= bound (or == exact when set), in
/// grlex-descending order.
std::vector<Exponent> monomials_dl(int bound, bool exact_degree = false);

}  // namespace lcalg
