#include <doctest.h>

#include <random>
#include <sstream>

#include "test_support.hpp"

using namespace ordfan;
using namespace testutil;

TEST_CASE("polynomial grammar") {
    CHECK(P("x^2 - y") == Polynomial::term(ring_xy(), M("x^2"), 1) -
                              Polynomial::term(ring_xy(), M("y"), 1));
    CHECK(P("3/2*x*y + x*y").coefficient(M("x*y")) == Rational(5, 2));
    CHECK(P("-x + y") == P("y") - P("x"));
    CHECK(P("7") == Polynomial::constant(ring_xy(), 7));
    CHECK(P("2*x^3*y^2 - 1/3") == P("2*x^3*y^2") - P("1/3"));
    CHECK(P("x*x") == P("x^2"));
}

TEST_CASE("parse errors carry positions") {
    SUBCASE("dangling sign") {
        try {
            P("x^2 -");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.column() == 6);
            CHECK(e.line() == 1);
        }
    }
    SUBCASE("unknown variable") {
        try {
            P("x + z");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.column() == 5);
        }
    }
    SUBCASE("malformed exponent") {
        CHECK_THROWS_AS(P("x^ +"), ParseError);
        CHECK_THROWS_AS(P("x^-2"), ParseError);
    }
    SUBCASE("zero denominator") {
        CHECK_THROWS_AS(P("1/0*x"), ParseError);
    }
    SUBCASE("trailing junk") {
        CHECK_THROWS_AS(P("x y"), ParseError);
    }
}

TEST_CASE("normal order enforcement") {
    auto sig = make_signature({"x", "dx"});
    CHECK(parse_polynomial("x*dx", sig, true) ==
          Polynomial::term(sig, parse_monomial("x*dx", sig), 1));
    CHECK_THROWS_AS(parse_polynomial("dx*x", sig, true), ParseError);
    CHECK(parse_polynomial("dx*x", sig, false).coefficient(parse_monomial("x*dx", sig)) ==
          Rational(1));
}

TEST_CASE("print and reparse is the identity") {
    std::mt19937_64 rng(89);
    for (int k = 0; k < 120; ++k) {
        auto sig = (k % 2) ? ring_xy() : make_signature({"a", "b", "c"});
        Polynomial p = random_polynomial(rng, sig, 4, 5, true);
        std::string text = to_string(p);
        if (p.is_zero()) {
            CHECK(text == "0");
            continue;
        }
        CHECK(parse_polynomial(text, sig) == p);
    }
}

TEST_CASE("printing style") {
    CHECK(to_string(P("x^2 - y")) == "x^2 - y");
    CHECK(to_string(P("-x^2 + y")) == "-x^2 + y");
    CHECK(to_string(P("5/2*x*y")) == "5/2*x*y");
    CHECK(to_string(Polynomial::zero(ring_xy())) == "0");
    CHECK(to_string(P("y + x + y^2")) == "y^2 + x + y");
}

TEST_CASE("ordering grammar") {
    CHECK(parse_ordering("lex", ring_xy()) == ord_lex());
    CHECK(parse_ordering("grlex", ring_xy()) == ord_grlex());
    CHECK(parse_ordering("grevlex", ring_xy()) == ord_grevlex());
    CHECK(parse_ordering("matrix [[1,1],[1,0]]", ring_xy()) ==
          OrderingSpec(MatrixOrdering::from_rows(2, {{1, 1}, {1, 0}})));
    CHECK(parse_ordering("weighted w=(2,1) tie=lex", ring_xy()) ==
          OrderingSpec(MatrixOrdering::weighted({2, 1}, MatrixOrdering::lex(2))));

    auto yz = ring_yz();
    auto tbl = parse_ordering("table D=2 deg1=(y,z) deg2=(yz,y^2,z^2) fallback=grlex", yz);
    REQUIRE(tbl.is_table());
    CHECK(tbl.compare(parse_monomial("yz", yz), parse_monomial("y^2", yz)) == Cmp::LT);

    CHECK_THROWS_AS(parse_ordering("table D=2 deg1=(y,z)", yz), ParseError);
    CHECK_THROWS_AS(parse_ordering("table D=1 deg1=(y,y)", yz), ParseError);
    CHECK_THROWS_AS(parse_ordering("sorted", yz), ParseError);
    CHECK_THROWS_AS(parse_ordering("matrix [[1,1]]", make_signature(3)), ParseError);
}

TEST_CASE("ordering round trip through text") {
    auto sig = ring_xy();
    for (const char* text : {"matrix [[1,1],[1,0]]", "grevlex",
                             "table D=2 deg1=(y,x) deg2=(y^2,x*y,x^2) fallback=grlex"}) {
        auto ord = parse_ordering(text, sig);
        auto printed = to_string(ord, *sig);
        CHECK(parse_ordering(printed, sig) == ord);
    }
}

TEST_CASE("session files") {
    SUBCASE("commutative session") {
        std::istringstream in(
            "# sample session\n"
            "ring x, y\n"
            "ordering default grlex\n"
            "ordering elim lex\n"
            "gen x^2 - y\n"
            "gen x*y - 1\n");
        Session s = parse_session(in);
        CHECK(s.sig->t == 2);
        CHECK(s.algebra.is_commutative());
        CHECK(s.orderings.size() == 2);
        CHECK(s.generators.size() == 2);
        CHECK(s.generators[0] == P("x^2 - y"));
    }
    SUBCASE("weyl session requires normal order") {
        std::istringstream in(
            "ring x, dx\n"
            "relations weyl pairs=(x:dx)\n"
            "gen x*dx - 1\n");
        Session s = parse_session(in);
        CHECK(s.algebra.kind() == AlgebraKind::Weyl);
        std::istringstream bad(
            "ring x, dx\n"
            "relations weyl pairs=(x:dx)\n"
            "gen dx*x\n");
        CHECK_THROWS_AS(parse_session(bad), ParseError);
    }
    SUBCASE("solvable session") {
        std::istringstream in(
            "ring y, z\n"
            "relations solvable\n"
            "rel z y: c=1 p=y^2\n"
            "gen z^2 - y\n");
        Session s = parse_session(in);
        CHECK(s.algebra.kind() == AlgebraKind::Solvable);
        CHECK(s.algebra.relation(0, 1).p == parse_polynomial("y^2", s.sig));
    }
    SUBCASE("undeclared variables fail with the offending line") {
        std::istringstream in(
            "ring x, y\n"
            "gen x - w\n");
        try {
            parse_session(in);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("ring must come first") {
        std::istringstream in("gen x\n");
        CHECK_THROWS_AS(parse_session(in), ParseError);
    }
}
