#include "doctest.h"

#include "lcalg/algebra.hpp"
#include "lcalg/errors.hpp"
#include "lcalg/specfile.hpp"

using namespace lcalg;

namespace {

const MultiPoly d = d_var();
const MultiPoly l = l_var();

template <class E>
void expect_at(const std::string& text, int line, int column)
{
    try {
        parse_spec(text);
        FAIL("no error for:\n" << text);
    } catch (const E& e) {
        CHECK(e.line() == line);
        CHECK(e.column() == column);
    }
}

}  // namespace

TEST_CASE("builtin algebras")
{
    SpecFile s = parse_spec("[algebra]\nbuiltin = \"block\"\np = 1\ntruncation = 8\n");
    CHECK(s.algebra.size() == 9);
    CHECK(s.algebra.truncation() == 8);
    CHECK(check_jacobi(s.algebra).passed());
    CHECK(s.modules.empty());

    SpecFile v = parse_spec("[algebra]\nbuiltin = virasoro\n");
    CHECK(v.algebra.entry(0, 0).at(0) == d + 2 * l);

    SpecFile m = parse_spec("[algebra]\nbuiltin = map_virasoro\nquotient = 3\n");
    CHECK(m.algebra.size() == 3);
    CHECK_THROWS_AS(parse_spec("[algebra]\nbuiltin = map_virasoro\n"), ParseError);

    SpecFile c = parse_spec("[algebra]\nbuiltin = current\nlie = sl2\n");
    CHECK(c.algebra.size() == 3);
    CHECK_THROWS_AS(parse_spec("[algebra]\nbuiltin = current\nlie = so5\n"), ParseError);
}

TEST_CASE("explicit tables and constants")
{
    const char* text = R"(# Virasoro by hand
[constants]
two = 2
w = "d + $two*l"

[algebra]
generators = "L"
p_00 = "$w"    # the whole table
)";
    SpecFile s = parse_spec(text);
    CHECK(s.algebra.entry(0, 0).at(0) == d + 2 * l);
    CHECK(check_skew(s.algebra).passed());

    // the block table at p = 1 truncated at grade 2
    const char* block = R"([algebra]
generators = "L0, L1, L2"
grades = "0, 1, 2"
truncation = 2
p_00 = "d + 2*l"
p_01 = "d + 3*l"
p_10 = "2*d + 3*l"
p_02 = "d + 4*l"
p_20 = "3*d + 4*l"
p_11 = "2*d + 4*l"
)";
    SpecFile b = parse_spec(block);
    CHECK(b.algebra.entry(1, 1).at(2) == 2 * d + 4 * l);
    CHECK(b.algebra.entry(1, 0).at(1) == 2 * d + 3 * l);
    CHECK(check_skew(b.algebra).passed());
    CHECK(check_jacobi(b.algebra).passed());

    // p_12 for the block table at p = 1
    SpecFile b3 = parse_spec("[algebra]\ngenerators = \"a, b, c, e\"\ngrades = \"0, 1, 2, 3\"\np_12 = \"2*d + 5*l\"\n");
    CHECK(b3.algebra.entry(1, 2).at(3) == 2 * d + 5 * l);

    SpecFile k = parse_spec("[algebra]\ngenerators = \"x, y\"\np_0_1_1 = \"d + l\"\n");
    CHECK(k.algebra.entry(0, 1).at(1) == d + l);
}

TEST_CASE("parse errors carry line and column")
{
    expect_at<ParseError>("[algebra]\ngenerators = \"L, x\"\ngrades = \"0, 1\"\np_01 = \"d + + l\"\n", 4, 13);
    expect_at<ParseError>("[algebra]\ngenerators = L\np_00 = d + 2*q\n", 3, 14);
    expect_at<ParseError>("[algebra]\nbuiltin = virasoro\ncolour = 3\n", 3, 1);
    expect_at<ParseError>("p = 1\n", 1, 1);
    expect_at<ParseError>("[algebra]\n  builtin virasoro\n", 2, 11);
    expect_at<ParseError>("[algebra\n", 1, 9);
    expect_at<ParseError>("[sections]\n", 1, 1);
    expect_at<ParseError>("[algebra]\nbuiltin = \"virasoro\n", 2, 11);
    expect_at<ParseError>("[algebra]\nbuiltin = block\np = d\ntruncation = 2\n", 3, 5);
    expect_at<ParseError>("[algebra]\nbuiltin = block\np = 1\ntruncation = two\n", 4, 14);
    CHECK_THROWS_AS(parse_spec("[constants]\nx = 1\n"), ParseError);
}

TEST_CASE("duplicates")
{
    expect_at<DuplicateDefinition>("[algebra]\nbuiltin = virasoro\nbuiltin = virasoro\n", 3, 1);
    expect_at<DuplicateDefinition>("[algebra]\nbuiltin = virasoro\n[algebra]\n", 3, 1);
    expect_at<DuplicateDefinition>("[algebra]\ngenerators = \"x, y\"\np_0_1_1 = d\np_0_1_1 = l\n", 4, 1);
    expect_at<DuplicateDefinition>("[algebra]\ngenerators = \"x, y\"\ngrades = \"0, 1\"\np_01 = d\np_0_1_1 = l\n", 5,
                                   1);
    expect_at<DuplicateDefinition>("[algebra]\ngenerators = \"x, x\"\n", 2, 18);
    expect_at<DuplicateDefinition>(
        "[algebra]\nbuiltin = virasoro\n[module M]\nbasis = v\nL = d\nact_0 = l\n", 6, 1);
}

TEST_CASE("unknown generators")
{
    expect_at<UnknownGenerator>("[algebra]\ngenerators = \"x, y\"\np_0_5_1 = d\n", 3, 1);
    expect_at<UnknownGenerator>("[algebra]\ngenerators = \"x, y\"\ngrades = \"0, 1\"\np_11 = d\n", 4, 1);
    expect_at<UnknownGenerator>("[algebra]\nbuiltin = virasoro\n[module M]\nbasis = v\nX = d\n", 5, 1);
    expect_at<UnknownGenerator>("[algebra]\nbuiltin = virasoro\n[module M]\nbasis = v\nvirasoro = X\n", 5, 12);
    expect_at<UnknownGenerator>("[algebra]\nbuiltin = virasoro\n[module M]\nbasis = v\nact_1 = d\n", 5, 1);
}

TEST_CASE("modules")
{
    const char* text = R"([algebra]
builtin = virasoro

[module M]
basis = "u, v"
L = "d + l + 1, 0; 0, d + 2*l"
virasoro = L
completely_nontrivial = true

[module R]
builtin = rank_one_vir
a = 1/2
b = -1
)";
    SpecFile s = parse_spec(text);
    REQUIRE(s.modules.size() == 2);
    const ModuleSpec& m = s.module();
    CHECK(m.name == "M");
    CHECK(m.virasoro == GenIndex{0});
    CHECK(m.completely_nontrivial);
    CHECK(m.module.rank() == 2);
    CHECK(m.module.action(0)[1][1] == d + 2 * l);
    CHECK(check_module(s.algebra, m.module).passed());
    CHECK(s.module("R").module.action(0)[0][0] == d + Scalar::rational(1, 2) * l - 1);
    CHECK_THROWS_AS(s.module("Q"), SpecError);

    // a 2x1 matrix for a rank two module
    expect_at<ParseError>("[algebra]\nbuiltin = virasoro\n[module M]\nbasis = \"u, v\"\nL = \"d; l\"\n", 5, 6);
    // matrix entries report their own column
    expect_at<ParseError>("[algebra]\nbuiltin = virasoro\n[module M]\nbasis = \"u, v\"\nL = \"d, 0; 0, ^\"\n", 5, 15);
}
