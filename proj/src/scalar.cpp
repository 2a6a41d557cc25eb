#include "lcalg/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace lcalg {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

Scalar Scalar::rational(long num, long den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

Scalar Scalar::inverse() const
{
    if (is_zero()) throw std::domain_error("division by zero scalar");
    mpq_class norm = re_ * re_ + im_ * im_;
    return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_real()) {
        if (sgn(o.re_) == 0) throw std::domain_error("division by zero scalar");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

namespace {

std::string rational_text(const mpq_class& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string imaginary_text(const mpq_class& q)
{
    if (q == 1) return "i";
    if (q == -1) return "-i";
    return rational_text(q) + "*i";
}

}  // namespace

std::string Scalar::to_string() const
{
    if (is_real()) return rational_text(re_);
    if (sgn(re_) == 0) return imaginary_text(im_);
    std::string out = rational_text(re_);
    if (sgn(im_) > 0) out += "+";
    return out + imaginary_text(im_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar factorial(unsigned n)
{
    mpz_class f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return Scalar(mpq_class(f));
}

Scalar binomial(unsigned n, unsigned k)
{
    if (k > n) return Scalar(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Scalar(mpq_class(r));
}

}  // namespace lcalg
