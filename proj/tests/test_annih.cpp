#include "lcalg/annih.hpp"

#include "lcalg/errors.hpp"

#include <doctest.h>

using namespace lcalg;

namespace {

const MultiPoly d = d_var();
const MultiPoly l = l_var();

SymbolCombination single(GenIndex g, int n, Scalar k = 1) { return {{Symbol{g, n}, k}}; }

}  // namespace

TEST_CASE("virasoro annihilation brackets")
{
    AnnihAlgebra X(virasoro(), 6);
    CHECK(annih_bracket(X, Symbol{0, 2}, Symbol{0, 1}) == single(0, 2));
    CHECK(annih_bracket(X, Symbol{0, 1}, Symbol{0, 1}).empty());
    // (m - n) L_(m+n-1), checked against the Witt relation directly
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            if (m + n - 1 > 6) {
                if (m != n) CHECK_THROWS_AS(annih_bracket(X, Symbol{0, m}, Symbol{0, n}), TruncationExceeded);
                continue;
            }
            SymbolCombination want;
            if (m != n && m + n >= 1) want = single(0, m + n - 1, Scalar(m - n));
            CHECK(annih_bracket(X, Symbol{0, m}, Symbol{0, n}) == want);
        }
    Report r = check_annih_lie(X);
    CHECK(r.passed());
    CHECK(r.count(Status::Pass) > 0);
}

TEST_CASE("map virasoro annihilation brackets")
{
    AnnihAlgebra X(map_virasoro(truncated_polynomial_algebra(3)), 4);
    // [L_(1) T, L_(2) T] = (1 - 2) L_(2) T^2
    CHECK(annih_bracket(X, Symbol{1, 1}, Symbol{1, 2}) == single(2, 2, -1));
    CHECK(check_annih_lie(X).passed());
}

TEST_CASE("block annihilation algebra")
{
    AnnihAlgebra X(block(Scalar(1), 6), 5);
    Report r = check_annih_lie(X);
    CHECK(r.passed());
    CHECK(r.count(Status::Pass) > 0);
    CHECK(r.count(Status::Skipped) > 0);

    // direct expansion of [L1_(1), L2_(0)] from ((i+p)d + (i+j+2p)l) L_{i+j}:
    // (2d L3)_(1) + C(1,1) (5 L3)_(0) = -2 L3_(0) + 5 L3_(0)
    CHECK(annih_bracket(X, Symbol{1, 1}, Symbol{2, 0}) == single(3, 0, 3));
}

TEST_CASE("a corrupted table is caught")
{
    ConformalAlgebra::Table t;
    t[{0, 0}] = {{0, d - 2 * l}};
    AnnihAlgebra X(ConformalAlgebra({"L"}, t), 4);
    Report r = check_annih_lie(X);
    CHECK_FALSE(r.passed());
}

TEST_CASE("symbols of derivatives")
{
    // (d L)_(n) = -n L_(n-1)
    CHECK(symbol_of({{0, d}}, 3) == single(0, 2, -3));
    CHECK(symbol_of({{0, d}}, 0).empty());
    CHECK(symbol_of({{0, d * d}}, 3) == single(0, 1, 6));
}

TEST_CASE("n-indexed module actions")
{
    const Scalar a = Scalar::rational(3, 2), b = -2;
    ConformalModule M = rank_one_vir(a, b);
    ModuleElement v = basis_vector(M, 0);
    CHECK(module_action_n(M, 0, 1, v) == ModuleElement{MultiPoly(a)});
    CHECK(module_action_n(M, 0, 0, v) == ModuleElement{d + b});
    CHECK(module_action_n(M, 0, 3, v) == ModuleElement{MultiPoly()});

    // reconstruct g_l u from the n-indexed actions
    ModuleElement u{d * d - 3 * d + 1};
    ModuleElement sum(1);
    for (int n = 0; n <= 4; ++n)
        sum[0] += module_action_n(M, 0, n, u)[0] * l.pow(static_cast<unsigned>(n)) *
                  factorial(static_cast<unsigned>(n)).inverse();
    CHECK(sum == act_generator(M, 0, u, l));
}

TEST_CASE("weight spaces of rank one modules")
{
    const Scalar a = Scalar::rational(1, 2), b = -1;
    ConformalModule M = rank_one_vir(a, b);
    WeightAnalysis w = weight_spaces(M, 0, 4, true);
    REQUIRE(w.weights.size() == 5);
    CHECK(w.unresolved == 0);
    for (int k = 0; k <= 4; ++k) {
        const WeightReport& r = w.weights[static_cast<std::size_t>(k)];
        CHECK(r.weight == a + Scalar(k));
        REQUIRE(r.dim() == 1);
        CHECK(proportionality(r.basis[0][0], (d + b).pow(static_cast<unsigned>(k))));
        ModuleElement img = module_action_n(M, 0, 1, r.basis[0]);
        CHECK(img[0] == r.weight * r.basis[0][0]);
    }
    CHECK(w.bound.passed());
}

TEST_CASE("weight spaces of trivial and direct sum modules")
{
    ConformalAlgebra vir = virasoro();
    WeightAnalysis t = weight_spaces(trivial_module(vir, 2), 0, 2);
    REQUIRE(t.weights.size() == 1);
    CHECK(t.weights[0].weight.is_zero());
    CHECK(t.weights[0].dim() == 6);
    CHECK(t.bound.count(Status::Skipped) == 1);

    ConformalModule s = direct_sum(rank_one_vir(1, 3), rank_one_vir(1, 3));
    WeightAnalysis w = weight_spaces(s, 0, 3, true);
    REQUIRE(w.weights.size() == 4);
    for (const auto& r : w.weights) CHECK(r.dim() == 2);
    CHECK(w.bound.passed());
}
