#include "lcalg/scalar.hpp"

#include <doctest.h>

#include <stdexcept>

using lcalg::Scalar;

TEST_CASE("scalars are kept in lowest terms")
{
    Scalar a = Scalar::rational(6, -4);
    CHECK(a.re() == mpq_class(-3, 2));
    CHECK(a.re().get_den() == 2);
    CHECK(a.to_string() == "-3/2");
    CHECK_THROWS_AS(Scalar::rational(1, 0), std::domain_error);
}

TEST_CASE("gaussian rational field operations")
{
    const Scalar i = Scalar::imaginary_unit();
    CHECK(i * i == Scalar(-1));
    Scalar z = Scalar::rational(2, 3) + Scalar::rational(-1, 5) * i;
    CHECK((z * z.inverse()).is_one());
    CHECK(z / z == Scalar(1));
    CHECK((z - z).is_zero());
    CHECK(z.conj() * z == Scalar(mpq_class(4, 9) + mpq_class(1, 25)));
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("scalar rendering")
{
    const Scalar i = Scalar::imaginary_unit();
    CHECK(Scalar(7).to_string() == "7");
    CHECK(i.to_string() == "i");
    CHECK((-i).to_string() == "-i");
    CHECK((Scalar::rational(1, 2) - Scalar::rational(3, 4) * i).to_string() == "1/2-3/4*i");
    CHECK((Scalar(1) + 2 * i).to_string() == "1+2*i");
}

TEST_CASE("factorials and binomials")
{
    CHECK(lcalg::factorial(0) == Scalar(1));
    CHECK(lcalg::factorial(5) == Scalar(120));
    CHECK(lcalg::binomial(6, 2) == Scalar(15));
    CHECK(lcalg::binomial(3, 5) == Scalar(0));
}
