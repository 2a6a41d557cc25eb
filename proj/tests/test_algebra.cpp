#include "lcalg/algebra.hpp"

#include "lcalg/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace lcalg;

namespace {

const MultiPoly d = d_var();
const MultiPoly l = l_var();

bool all_pass(const Report& r) { return r.passed() && r.count(Status::Skipped) == 0; }

}  // namespace

TEST_CASE("virasoro brackets")
{
    ConformalAlgebra vir = virasoro();
    CHECK(bracket(vir, generator(0), generator(0)) == GenVector{{0, d + 2 * l}});
    CHECK(bracket(vir, generator(0, d), generator(0)) == GenVector{{0, -l * (d + 2 * l)}});
    CHECK(jth_product(vir, generator(0), generator(0), 0) == AlgebraElement{{0, d}});
    CHECK(jth_product(vir, generator(0), generator(0), 1) == AlgebraElement{{0, MultiPoly(2)}});
    CHECK(jth_product(vir, generator(0), generator(0), 5).empty());
    CHECK(all_pass(check_skew(vir)));
    CHECK(all_pass(check_jacobi(vir)));
}

TEST_CASE("block algebra brackets")
{
    ConformalAlgebra b = block(Scalar(1), 8);
    CHECK(bracket(b, generator(1), generator(2)) == GenVector{{3, 2 * d + 5 * l}});
    CHECK(b.entry(0, 0) == GenVector{{0, d + 2 * l}});
    ConformalAlgebra b2 = block(Scalar(2), 4);
    CHECK(b2.entry(0, 0) == GenVector{{0, 2 * d + 4 * l}});
    CHECK_THROWS_AS(b.entry(4, 5), TruncationExceeded);
    CHECK_THROWS_AS(block(Scalar(0), 3), InvalidStructure);
}

TEST_CASE("skew-symmetry of block algebras matches a direct expansion")
{
    // p_ij(d,l) + p_ji(d,-l-d) expanded by hand with the closed formula
    for (Scalar p : {Scalar(1), Scalar(2), Scalar::rational(1, 2)}) {
        ConformalAlgebra b = block(p, 8);
        for (int i = 0; i <= 8; ++i)
            for (int j = 0; i + j <= 8; ++j) {
                Scalar ci = Scalar(i) + p, cj = Scalar(j) + p, s = Scalar(i + j) + 2 * p;
                // (ci d + s l) + (cj d + s(-l-d)) = (ci + cj - s) d = 0
                CHECK((ci + cj - s).is_zero());
                CHECK(is_zero(skew_defect(b, GenIndex(i), GenIndex(j))));
            }
        Report r = check_skew(b);
        CHECK(r.passed());
        // pairs (i,j) with i <= j and i+j <= 8
        CHECK(r.count(Status::Pass) == 25);
        Report jac = check_jacobi(b);
        CHECK(jac.passed());
        CHECK(jac.count(Status::Pass) > 0);
    }
}

TEST_CASE("skew failure carries a witness")
{
    ConformalAlgebra::Table t;
    t[{0, 1}] = {{1, d}};
    t[{1, 0}] = {{1, d}};
    ConformalAlgebra bad({"a", "b"}, t);
    Report r = check_skew(bad);
    CHECK_FALSE(r.passed());
    bool found = false;
    for (const auto& c : r.checks)
        if (c.status == Status::Fail) {
            found = true;
            // d + d = 2d: substituting l -> -l-d does not touch d
            CHECK(c.witnesses.at(0) == "b: 2*d");
        }
    CHECK(found);
}

TEST_CASE("built-in constructors satisfy the axioms")
{
    CHECK(all_pass(check_skew(current(sl2_structure()))));
    CHECK(all_pass(check_jacobi(current(sl2_structure()))));
    ConformalAlgebra sd = vir_semidirect_current(Scalar(1), sl2_structure());
    CHECK(all_pass(check_skew(sd)));
    CHECK(all_pass(check_jacobi(sd)));
    for (int n = 1; n <= 4; ++n) {
        ConformalAlgebra v = map_virasoro(truncated_polynomial_algebra(n));
        CHECK(all_pass(check_skew(v)));
        CHECK(all_pass(check_jacobi(v)));
    }
    ConformalAlgebra vp = map_virasoro_polynomial(8);
    CHECK(check_jacobi(vp).passed());
    CHECK(check_jacobi(vp).count(Status::Skipped) > 0);
    for (Scalar a : {Scalar(0), Scalar(2), Scalar::rational(-1, 3)}) {
        ConformalAlgebra ab = vir_semidirect_current(a, abelian_structure(2));
        CHECK(all_pass(check_jacobi(ab)));
    }
}

TEST_CASE("current algebras are lambda-free")
{
    ConformalAlgebra c = current(sl2_structure());
    for (const auto& [key, v] : c.table())
        for (const auto& [k, p] : v) CHECK(p.is_constant());
    StructureConstants bad = sl2_structure();
    bad[0][2][1] = 5;
    CHECK_THROWS_AS(current(bad), InvalidStructure);
}

TEST_CASE("non-abelian semidirect product fails Jacobi unless a = 1")
{
    Report r = check_jacobi(vir_semidirect_current(Scalar(0), nonabelian2_structure()));
    CHECK_FALSE(r.passed());
    bool witness = false;
    for (const auto& c : r.checks)
        if (c.status == Status::Fail && !c.witnesses.empty() && c.witnesses[0] != "0") witness = true;
    CHECK(witness);
    CHECK(check_jacobi(vir_semidirect_current(Scalar(1), nonabelian2_structure())).passed());
}

TEST_CASE("map virasoro of C[T]/(T^2)")
{
    ConformalAlgebra v = map_virasoro(truncated_polynomial_algebra(2));
    REQUIRE(v.size() == 2);
    CHECK(v.entry(0, 0) == GenVector{{0, d + 2 * l}});
    CHECK(v.entry(0, 1) == GenVector{{1, d + 2 * l}});
    CHECK(v.entry(1, 0) == GenVector{{1, d + 2 * l}});
    CHECK(v.entry(1, 1).empty());

    CommutativeAlgebra no_unit{{"x"}, abelian_structure(1), std::nullopt};
    CHECK_THROWS_AS(map_virasoro(no_unit), InvalidStructure);
}

TEST_CASE("table validation")
{
    ConformalAlgebra::Table t;
    t[{0, 0}] = {{0, d + l * m_var()}};
    CHECK_THROWS_AS(ConformalAlgebra({"L"}, t), InvalidStructure);
    ConformalAlgebra::Table g;
    g[{0, 1}] = {{0, d}};
    CHECK_THROWS_AS(ConformalAlgebra({"a", "b"}, g, Grading{{0, 1}, std::nullopt}), InvalidStructure);
}

TEST_CASE("sesquilinearity on random elements")
{
    std::mt19937 rng(3);
    std::vector<ConformalAlgebra> algebras{virasoro(), block(Scalar(1), 4),
                                           vir_semidirect_current(Scalar(1), sl2_structure())};
    for (const auto& A : algebras) {
        for (int trial = 0; trial < 10; ++trial) {
            AlgebraElement x, y;
            for (GenIndex g = 0; g < A.size(); ++g) {
                if (A.grade(g) && *A.grade(g) > 2) continue;
                MultiPoly fx = oracle::random_poly(rng, {Var::D}, 2, 2);
                MultiPoly fy = oracle::random_poly(rng, {Var::D}, 2, 2);
                if (!fx.is_zero()) x[g] = fx;
                if (!fy.is_zero()) y[g] = fy;
            }
            AlgebraElement dx = x, dy = y;
            for (auto& [g, p] : dx) p *= d;
            for (auto& [g, p] : dy) p *= d;
            GenVector base = bracket(A, x, y);
            GenVector left = bracket(A, dx, y), right = bracket(A, x, dy);
            GenVector want_left, want_right;
            accumulate(want_left, base, -l);
            accumulate(want_right, base, d + l);
            CHECK(left == want_left);
            CHECK(right == want_right);
        }
    }
}

TEST_CASE("graded jth products land in the sum grade")
{
    ConformalAlgebra b = block(Scalar::rational(1, 2), 6);
    for (GenIndex i = 0; i <= 3; ++i)
        for (GenIndex j = 0; j <= 3; ++j)
            for (int n = 0; n <= 2; ++n)
                for (const auto& [k, p] : jth_product(b, generator(i), generator(j), n)) CHECK(*b.grade(k) == int(i + j));
}

TEST_CASE("virasoro weights are normalized")
{
    ConformalAlgebra b = block(Scalar(2), 4);
    for (GenIndex i = 0; i <= 4; ++i) {
        auto w = virasoro_weight(b, 0, i);
        REQUIRE(w);
        CHECK(w->first == Scalar(2) + Scalar::rational(long(i), 2));
        CHECK(w->second.is_zero());
    }
    CHECK_THROWS_AS(virasoro_weight(current(sl2_structure()), 0, 1), NotVirasoroAtZero);
}
