#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace lcalg {

/// Gaussian rational re + im*i. Both parts are GMP rationals kept in lowest
/// terms, so equality is structural and no operation ever rounds.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : re_(value) {}
    explicit Scalar(mpq_class re, mpq_class im = 0);

    /// num/den, canonicalized. Throws std::domain_error if den == 0.
    static Scalar rational(long num, long den);
    static Scalar imaginary_unit();

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// Multiplicative inverse; throws std::domain_error on zero.
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Total order (re first, then im). Only meaningful as a sort key.
    friend bool lex_less(const Scalar& a, const Scalar& b)
    {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    /// Canonical text: `p/q`, `r/s*i`, or `p/q+r/s*i` (integers drop `/1`,
    /// unit imaginary parts print as `i`).
    std::string to_string() const;

private:
    mpq_class re_ = 0;
    mpq_class im_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar factorial(unsigned n);
Scalar binomial(unsigned n, unsigned k);

}  // namespace lcalg
