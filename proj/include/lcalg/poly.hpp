#pragma once

#include "lcalg/scalar.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcalg {

/// The fixed variable universe. D is the derivation ∂, L and M are the
/// bracket parameters λ and μ, N is a spare for triple-nested identities.
enum class Var : std::uint8_t { D = 0, L = 1, M = 2, N = 3 };

inline constexpr std::size_t kNumVars = 4;

char var_symbol(Var v);

using Exponent = std::array<int, kNumVars>;

/// Graded lexicographic order, descending: higher total degree first, ties
/// broken lexicographically with D > L > M > N. Iterating a Terms map yields
/// the canonical rendering order.
struct GrlexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

int total_degree(const Exponent& e);

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which compares below every integer and absorbs addition.
class Degree {
public:
    constexpr Degree(int value) : value_(value), finite_(true) {}
    static constexpr Degree minus_infinity() { return Degree(); }

    bool is_minus_infinity() const { return !finite_; }
    /// Throws std::logic_error for minus infinity.
    int value() const;

    friend bool operator==(const Degree& a, const Degree& b)
    {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend bool operator<(const Degree& a, const Degree& b)
    {
        if (!a.finite_) return b.finite_;
        return b.finite_ && a.value_ < b.value_;
    }
    friend Degree operator+(const Degree& a, const Degree& b)
    {
        if (!a.finite_ || !b.finite_) return minus_infinity();
        return Degree(a.value_ + b.value_);
    }

    std::string to_string() const;

private:
    constexpr Degree() = default;
    int value_ = 0;
    bool finite_ = false;
};

/// Sparse exact polynomial in (∂, λ, μ, ν) with Gaussian-rational
/// coefficients. Zero coefficients are never stored, so the term map is a
/// canonical form and operator== is polynomial identity.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Scalar, GrlexDescending>;

    MultiPoly() = default;
    MultiPoly(const Scalar& constant);
    MultiPoly(long constant) : MultiPoly(Scalar(constant)) {}

    static MultiPoly var(Var v);
    static MultiPoly monomial(const Exponent& e, const Scalar& c = Scalar(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool involves(Var v) const;
    /// True if every term only uses variables from the given list.
    bool only_uses(std::initializer_list<Var> vars) const;

    Scalar coefficient(const Exponent& e) const;
    Scalar constant_term() const { return coefficient(Exponent{}); }
    /// Coefficient of the grlex-leading term; zero for the zero polynomial.
    Scalar leading_coefficient() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Scalar& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
    friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(long c, MultiPoly a) { return a *= Scalar(c); }
    friend MultiPoly operator*(MultiPoly a, long c) { return a *= Scalar(c); }
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(unsigned n) const;

    Degree total_degree() const;
    Degree degree(Var v) const;

    /// Canonical text in the input grammar, e.g. `d^2 + 3*d*l + 2*l^2`.
    std::string to_string() const;

private:
    void add_term(const Exponent& e, const Scalar& c);
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

inline MultiPoly d_var() { return MultiPoly::var(Var::D); }
inline MultiPoly l_var() { return MultiPoly::var(Var::L); }
inline MultiPoly m_var() { return MultiPoly::var(Var::M); }
inline MultiPoly n_var() { return MultiPoly::var(Var::N); }

MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly mul(const MultiPoly& p, const MultiPoly& q);

/// Image of p under the ring map var -> expr (other variables fixed).
MultiPoly substitute(const MultiPoly& p, Var var, const MultiPoly& expr);

/// Simultaneous substitution; variables not listed are fixed.
MultiPoly substitute(const MultiPoly& p, const std::vector<std::pair<Var, MultiPoly>>& images);

/// Polynomial coefficient of var^k, as a polynomial in the other variables.
MultiPoly coeff_of(const MultiPoly& p, Var var, int k);

/// Sum of the terms of total degree exactly k.
MultiPoly homogeneous_part(const MultiPoly& p, int k);

struct Degrees {
    Degree total = Degree::minus_infinity();
    std::array<Degree, kNumVars> per_var{Degree::minus_infinity(), Degree::minus_infinity(),
                                         Degree::minus_infinity(), Degree::minus_infinity()};
};

Degrees degrees(const MultiPoly& p);

/// If p is a scalar multiple of q (q nonzero), returns the factor.
std::optional<Scalar> proportionality(const MultiPoly& p, const MultiPoly& q);

}  // namespace lcalg
