#include "lcalg/expr.hpp"

#include "lcalg/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace lcalg;

TEST_CASE("parse polynomial strings")
{
    const MultiPoly d = d_var(), l = l_var();
    CHECK(parse_poly("d + 2*l") == d + 2 * l);
    CHECK(parse_poly("2*d + 5*l") == 2 * d + 5 * l);
    CHECK(parse_poly("d^2 + 3*d*l + 2*l^2") == d.pow(2) + 3 * d * l + 2 * l.pow(2));
    CHECK(parse_poly("-(d - 1/2*l)^2") == -((d - Scalar::rational(1, 2) * l).pow(2)));
    CHECK(parse_poly("(1+2*i)*m") == (Scalar(1) + 2 * Scalar::imaginary_unit()) * m_var());
    CHECK(parse_scalar("-3/4") == Scalar::rational(-3, 4));
}

TEST_CASE("parse errors carry a column")
{
    try {
        parse_poly("d + + l");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(parse_poly("2d"), ParseError);
    CHECK_THROWS_AS(parse_poly("d l"), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
    CHECK_THROWS_AS(parse_poly("x"), ParseError);
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("(d"), ParseError);
    CHECK_THROWS_AS(parse_scalar("d"), ParseError);
}

TEST_CASE("named constants")
{
    ConstantTable c{{"vir", parse_poly("d + 2*l")}};
    CHECK(parse_poly("3*$vir", &c) == 3 * parse_poly("d + 2*l"));
    CHECK_THROWS_AS(parse_poly("$nope", &c), ParseError);
}

TEST_CASE("render then parse round-trips")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        MultiPoly p = oracle::random_poly(rng, {Var::D, Var::L, Var::M}, 4, 6);
        CHECK(parse_poly(p.to_string()) == p);
    }
}
