#pragma once

#include "lcalg/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lcalg {

/// Dense univariate polynomial in ∂ over Scalar, coefficients from the
/// constant term up. Trailing zeros are trimmed, so the zero polynomial has
/// no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Scalar& c);
    UniPoly(long c) : UniPoly(Scalar(c)) {}
    explicit UniPoly(std::vector<Scalar> coeffs);

    static UniPoly x();
    /// Throws std::invalid_argument if p involves anything but ∂.
    static UniPoly from_multi(const MultiPoly& p);
    MultiPoly to_multi() const;

    const std::vector<Scalar>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Scalar leading() const { return c_.empty() ? Scalar() : c_.back(); }
    UniPoly monic() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Quotient and remainder; throws std::domain_error on a zero divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    bool divides(const UniPoly& other) const;

    std::string to_string() const { return to_multi().to_string(); }

private:
    void trim();
    std::vector<Scalar> c_;
};

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static PolyMatrix identity(std::size_t n);
    static PolyMatrix from_rows(const std::vector<std::vector<UniPoly>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    UniPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const UniPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Rows joined by `;`, entries by `,`.
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<UniPoly> data_;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

/// Determinant by fraction-free (Bareiss) elimination.
UniPoly determinant(const PolyMatrix& m);

struct SmithForm {
    PolyMatrix U, D, V;
    /// The nonzero diagonal entries of D, monic, each dividing the next.
    std::vector<UniPoly> invariants;
};

/// U * Mx * V = D with U, V unimodular. Pivots are the minimal-degree nonzero
/// entry of the remaining block, ties broken row-major; each pivot is made
/// monic.
SmithForm smith_normal_form(const PolyMatrix& mx);

struct TorsionSplit {
    int free_rank = 0;
    std::vector<UniPoly> torsion;
};

/// For the module C[∂]^rows / (column span of the presentation): free rank is
/// rows minus the number of nonzero invariants; torsion invariants are the
/// nonconstant ones.
TorsionSplit torsion_split(const PolyMatrix& presentation);

}  // namespace lcalg
