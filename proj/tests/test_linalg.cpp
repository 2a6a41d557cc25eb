#include "lcalg/linalg.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace lcalg;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c)
{
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (rng() % 2) m(i, j) = oracle::random_scalar(rng);
    return m;
}

}  // namespace

TEST_CASE("nullspace vectors are killed and canonical")
{
    Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}}, 3);
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 2);
    CHECK(ns[0] == Vector{1, 0, Scalar::rational(-1, 3)});
    CHECK(ns[1] == Vector{0, 1, Scalar::rational(-2, 3)});
    for (const auto& v : ns) {
        Vector z = m.apply(v);
        for (const auto& s : z) CHECK(s.is_zero());
    }
    // leading ones, RREF among the basis rows
    CHECK(ns == canonical_basis(ns, 3));
}

TEST_CASE("rank-nullity on random matrices")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
        Matrix m = random_matrix(rng, r, c);
        auto ns = nullspace(m);
        CHECK(rank(m) + ns.size() == c);
        for (const auto& v : ns)
            for (const auto& s : m.apply(v)) CHECK(s.is_zero());
    }
}

TEST_CASE("solve finds a solution or reports inconsistency")
{
    Matrix m = Matrix::from_rows({{1, 1}, {1, -1}}, 2);
    auto x = solve(m, {3, 1});
    REQUIRE(x);
    CHECK((*x)[0] == Scalar(2));
    CHECK((*x)[1] == Scalar(1));
    Matrix s = Matrix::from_rows({{1, 1}, {2, 2}}, 2);
    CHECK_FALSE(solve(s, {1, 3}));
}

TEST_CASE("characteristic polynomial matches a 2x2 oracle")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = random_matrix(rng, 2, 2);
        auto cp = characteristic_polynomial(m);
        REQUIRE(cp.size() == 3);
        CHECK(cp[2] == Scalar(1));
        CHECK(cp[1] == -(m(0, 0) + m(1, 1)));
        CHECK(cp[0] == m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
    }
}

TEST_CASE("coefficient matching")
{
    const MultiPoly d = d_var(), l = l_var();
    auto x = solve_combination({d, l, d * l}, 2 * d - 3 * d * l);
    REQUIRE(x);
    CHECK((*x)[0] == Scalar(2));
    CHECK((*x)[1] == Scalar(0));
    CHECK((*x)[2] == Scalar(-3));
    CHECK_FALSE(solve_combination({d, l}, d * l));

    auto mons = monomials_dl(2);
    REQUIRE(mons.size() == 6);
    CHECK(mons.front() == Exponent{2, 0, 0, 0});
    CHECK(mons.back() == Exponent{0, 0, 0, 0});
    CHECK(monomials_dl(2, true).size() == 3);
}
