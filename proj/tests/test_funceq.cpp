#include "lcalg/funceq.hpp"

#include "lcalg/errors.hpp"
#include "lcalg/linalg.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace lcalg;

namespace {

const MultiPoly d = d_var();
const MultiPoly l = l_var();
const MultiPoly m = m_var();

bool spans(const SolutionBasis& sb, const MultiPoly& f)
{
    std::vector<MultiPoly> cols = sb.basis;
    return solve_combination(cols, f).has_value();
}

FuncEqInstance instance(Scalar a, Scalar b, Scalar di, Scalar ci, Scalar dj, Scalar cj, int bound)
{
    FuncEqInstance inst;
    inst.a = a;
    inst.b = b;
    inst.delta_i = di;
    inst.c_i = ci;
    inst.delta_j = dj;
    inst.c_j = cj;
    inst.degree_bound = bound;
    return inst;
}

}  // namespace

TEST_CASE("adjoint intertwiner")
{
    const Scalar delta = Scalar::rational(3, 2), c = -2;
    // (l - m)(d + delta(l + m) + c) against the right-hand side, expanded by hand
    MultiPoly f = d + delta * l + c;
    MultiPoly x = d + c;
    MultiPoly lhs = (l - m) * (x + delta * (l + m));
    MultiPoly rhs = (x + l + delta * m) * (x + delta * l) - (x + m + delta * l) * (x + delta * m);
    CHECK(lhs == rhs);

    FuncEqInstance inst = instance(2, 0, delta, c, delta, c, 2);
    CHECK(intertwiner_residual(inst, f).is_zero());
    SolutionBasis sb = solve_intertwiner(inst);
    CHECK(spans(sb, f));
    for (const auto& g : sb.basis) CHECK(intertwiner_residual(inst, g).is_zero());
}

TEST_CASE("b must equal c_i - c_j")
{
    CHECK(solve_intertwiner(instance(3, 1, 2, 0, 2, 0, 6)).dimension() == 0);
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Scalar ci = oracle::random_scalar(rng), cj = oracle::random_scalar(rng);
        Scalar b = ci - cj + Scalar(1 + static_cast<long>(rng() % 3));
        FuncEqInstance inst = instance(oracle::random_scalar(rng), b, oracle::random_scalar(rng), ci,
                                       oracle::random_scalar(rng), cj, 6);
        CHECK(solve_intertwiner(inst).dimension() == 0);
    }
}

TEST_CASE("constants at a = 1")
{
    SolutionBasis sb = solve_intertwiner(instance(1, 0, Scalar::rational(-4, 3), 0, Scalar::rational(-4, 3), 0, 0));
    REQUIRE(sb.dimension() == 1);
    CHECK(sb.basis[0] == MultiPoly(1));
}

TEST_CASE("homogeneous solutions from the table")
{
    const Scalar di = Scalar::rational(5, 7);
    SolutionBasis c2 = solve_homogeneous(1, di, di + 2, 2);
    REQUIRE(c2.dimension() == 1);
    CHECK(c2.basis[0] == l * (d - di * l));

    const Scalar a = Scalar::rational(-1, 2);
    SolutionBasis b1 = solve_homogeneous(a, di, di + 2 - a, 1);
    REQUIRE(b1.dimension() == 1);
    CHECK(b1.basis[0] == d - di / (1 - a) * l);

    SolutionBasis d2 = solve_homogeneous(1, -2, 1, 3);
    REQUIRE(d2.dimension() == 1);
    CHECK(d2.basis[0] == l * (d * d + 3 * d * l + 2 * l * l));
    RowParams printed = printed_row_2d_params();
    CHECK(solve_homogeneous(printed.a, printed.delta_i, printed.delta_j, 3).dimension() == 0);
}

TEST_CASE("degree offsets")
{
    const Scalar a = Scalar::rational(7, 2), di = 3;
    DegreeOffset one = degree_offset(MultiPoly(1), a, di, di + 1 - a);
    CHECK(one.holds);
    CHECK(one.deg_lambda == 0);

    const Scalar delta = 4;
    DegreeOffset adj = degree_offset(top_homogeneous_part(d + delta * l + 5), 2, delta, delta);
    CHECK(adj.holds);
    CHECK(adj.expected == Scalar(1));

    DegreeOffset d3 = degree_offset(l * (d * d + 3 * d * l + 2 * l * l), 1, -2, 1);
    CHECK(d3.holds);
    CHECK(d3.deg_lambda == 3);
    CHECK_THROWS_AS(degree_offset(l * (d * d + 3 * d * l + 2 * l * l), 1, -1, 2), NotASolution);

    CHECK_THROWS_AS(degree_offset(d * d, 1, 1, 1), NotASolution);
    CHECK_THROWS_AS(degree_offset(MultiPoly(), 1, 1, 1), NotASolution);
}

TEST_CASE("a zero Delta_i solution where the offset counts total degree")
{
    // f = d solves the homogeneous equation with a = 0, Δ_i = 0, Δ_j = 2, but
    // deg_l f = 0 while a + Δ_j - Δ_i - 1 = 1; this regime is outside the table
    SolutionBasis sb = solve_homogeneous(0, 0, 2, 1);
    REQUIRE(sb.dimension() == 1);
    DegreeOffset off = degree_offset(sb.basis[0], 0, 0, 2);
    CHECK_FALSE(off.holds);
    CHECK(off.total_degree == 1);
}

TEST_CASE("the solution table verifies at the default samples")
{
    auto checks = verify_solution_table_checks(default_table_samples(), default_perturbations());
    std::size_t rows_seen = 0, perturbed = 0;
    for (const auto& c : checks) {
        CHECK_MESSAGE(c.passed(), "row " << c.row << " a=" << c.a << " di=" << c.delta_i << " dj=" << c.delta_j);
        if (!c.perturbed) ++rows_seen;
        else ++perturbed;
    }
    CHECK(rows_seen > 0);
    CHECK(perturbed == 5 * rows_seen);
    CHECK(verify_solution_table(default_table_samples()).passed());
}

TEST_CASE("row 1c at a = 3")
{
    const Scalar a = 3, di = a - 2;
    MultiPoly f = d * d - (1 + 2 * di) / (1 - a) * d * l - di / (1 - a) * l * l;
    CHECK(homogeneous_residual(a, di, 1, f).is_zero());
    CHECK(solve_homogeneous(a, di, 1, 2).dimension() == 1);
}

TEST_CASE("perturbed row 2b")
{
    CHECK(solve_homogeneous(1, 2, 2 + Scalar::rational(3, 2), 1).dimension() == 0);
}

TEST_CASE("solution spaces are stable when the bound doubles")
{
    for (const auto& row : solution_table()) {
        auto p = row.instantiate(Scalar::rational(-1, 3), Scalar(5));
        REQUIRE(p);
        FuncEqInstance inst = instance(p->a, 0, p->delta_i, 0, p->delta_j, 0, row.k);
        CHECK(solve_intertwiner(inst).dimension() == 1);
        inst.degree_bound = 2 * row.k + 2;
        CHECK(solve_intertwiner(inst).dimension() == 1);
    }
}

TEST_CASE("second orientation")
{
    FuncEqInstance inst = instance(1, 0, Scalar::rational(2, 5), 3, Scalar::rational(2, 5), 3, 0);
    // constants: -m on the left, (d + ...) - (d + m + ...) = -m on the right
    CHECK(bcsx_residual(inst, MultiPoly(1)).is_zero());
    SolutionBasis sb = bcsx_variant_solver(inst);
    REQUIRE(sb.dimension() == 1);
    CHECK(sb.basis[0] == MultiPoly(1));

    FuncEqInstance off = instance(Scalar::rational(7, 3), 0, 1, 2, -3, Scalar::rational(-1, 2), 3);
    CHECK(bcsx_variant_solver(off).dimension() == 0);

    inst.degree_bound = 4;
    for (const auto& q : bcsx_variant_solver(inst).basis) CHECK(bcsx_residual(inst, q).is_zero());
}

TEST_CASE("scaling does not change solutions")
{
    const Scalar di = 2;
    MultiPoly f = l * (d - di * l);
    for (Scalar k : {Scalar(3), Scalar::rational(-1, 4), Scalar::imaginary_unit()})
        CHECK(homogeneous_residual(1, di, di + 2, k * f).is_zero());
}
