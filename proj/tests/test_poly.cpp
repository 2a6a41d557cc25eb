#include "lcalg/poly.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace lcalg;

namespace {

const MultiPoly d = d_var();
const MultiPoly l = l_var();
const MultiPoly m = m_var();

}  // namespace

TEST_CASE("add")
{
    CHECK(add(d + 2 * l, MultiPoly()) == d + 2 * l);
    CHECK(add(d + 2 * l, -d - 2 * l).is_zero());
    MultiPoly p = d.pow(2), q = 3 * d * l + 2 * l.pow(2);
    CHECK(add(p, q) == oracle::naive_add(p, q));
    CHECK(add(p, q).to_string() == "d^2 + 3*d*l + 2*l^2");
}

TEST_CASE("mul")
{
    CHECK(mul(d + 2 * l, MultiPoly(1)) == d + 2 * l);
    MultiPoly f = d.pow(2) + 3 * d * l + 2 * l.pow(2);
    CHECK(mul(l, f) == l * d.pow(2) + 3 * d * l.pow(2) + 2 * l.pow(3));
    CHECK(mul(d + l, d - l) == oracle::naive_mul(d + l, d - l));
    CHECK(mul(d + l, d - l).to_string() == "d^2 - l^2");
}

TEST_CASE("substitute")
{
    CHECK(substitute(d + 2 * l, Var::L, -l - d) == -d - 2 * l);
    MultiPoly f = d - 3 * l;
    CHECK(substitute(f, Var::L, l + m) == oracle::naive_substitute(f, Var::L, l + m));
    CHECK(substitute(f, Var::L, l + m).to_string() == "d - 3*l - 3*m");
    CHECK(substitute(d.pow(2), Var::D, d + l) == oracle::naive_substitute(d.pow(2), Var::D, d + l));
    CHECK(substitute(d.pow(2), Var::D, d + l) == d.pow(2) + 2 * d * l + l.pow(2));

    // simultaneous, not iterative: swap d and l
    MultiPoly g = d.pow(2) * l;
    CHECK(substitute(g, {{Var::D, l}, {Var::L, d}}) == l.pow(2) * d);
}

TEST_CASE("coeff_of")
{
    const Scalar delta = Scalar::rational(7, 3);
    CHECK(coeff_of(d + 2 * l, Var::L, 1) == MultiPoly(2));
    CHECK(coeff_of(d + 2 * l, Var::L, 0) == d);
    CHECK(coeff_of(l * (d - delta * l), Var::L, 2) == MultiPoly(-delta));
    CHECK(coeff_of(d, Var::L, 4).is_zero());
}

TEST_CASE("degrees")
{
    Degrees a = degrees(d + 2 * l);
    CHECK(a.total == Degree(1));
    CHECK(a.per_var[0] == Degree(1));
    CHECK(a.per_var[1] == Degree(1));
    CHECK(a.per_var[2] == Degree(0));

    Degrees b = degrees(l * (d.pow(2) + 3 * d * l + 2 * l.pow(2)));
    CHECK(b.total == Degree(3));
    CHECK(b.per_var[1] == Degree(3));

    Degrees z = degrees(MultiPoly());
    CHECK(z.total.is_minus_infinity());
    CHECK(z.total < Degree(0));
    CHECK((z.total + Degree(4)).is_minus_infinity());
    CHECK_THROWS_AS(z.total.value(), std::logic_error);
}

TEST_CASE("rendering follows grlex with d > l > m")
{
    const Scalar i = Scalar::imaginary_unit();
    MultiPoly p = l.pow(2) + d * l + d.pow(2) + m + 1;
    CHECK(p.to_string() == "d^2 + d*l + l^2 + m + 1");
    CHECK((-d + Scalar::rational(1, 2) * l).to_string() == "-d + 1/2*l");
    CHECK(((Scalar(1) + 2 * i) * d - i * l).to_string() == "(1+2*i)*d - i*l");
    CHECK(MultiPoly().to_string() == "0");
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937 rng(20240917);
    const std::vector<Var> vars{Var::D, Var::L, Var::M};
    for (int trial = 0; trial < 60; ++trial) {
        MultiPoly p = oracle::random_poly(rng, vars, 3);
        MultiPoly q = oracle::random_poly(rng, vars, 3);
        MultiPoly r = oracle::random_poly(rng, vars, 3);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + q == oracle::naive_add(p, q));
        CHECK(p * q == oracle::naive_mul(p, q));
        if (!p.is_zero() && !q.is_zero())
            CHECK((p * q).total_degree().value() == p.total_degree().value() + q.total_degree().value());
    }
}

TEST_CASE("substitution and coefficient properties")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        MultiPoly p = oracle::random_poly(rng, {Var::D, Var::L}, 4);
        CHECK(substitute(substitute(p, Var::L, l + m), Var::M, MultiPoly()) == p);

        MultiPoly rebuilt;
        Degree dl = p.degree(Var::L);
        if (!dl.is_minus_infinity())
            for (int k = 0; k <= dl.value(); ++k) rebuilt += coeff_of(p, Var::L, k) * l.pow(static_cast<unsigned>(k));
        CHECK(rebuilt == p);

        MultiPoly e = oracle::random_poly(rng, {Var::D, Var::L, Var::M}, 2, 3);
        CHECK(substitute(p, Var::D, e) == oracle::naive_substitute(p, Var::D, e));
    }
}

TEST_CASE("homogeneous parts and proportionality")
{
    MultiPoly p = d.pow(2) + 3 * d * l + d + 5;
    CHECK(homogeneous_part(p, 2) == d.pow(2) + 3 * d * l);
    CHECK(homogeneous_part(p, 0) == MultiPoly(5));
    auto k = proportionality(3 * d + 6 * l, d + 2 * l);
    REQUIRE(k);
    CHECK(*k == Scalar(3));
    CHECK_FALSE(proportionality(d + l, d + 2 * l));
    CHECK(*proportionality(MultiPoly(), d) == Scalar(0));
}
