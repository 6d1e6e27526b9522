#include <doctest.h>

#include <random>

#include "test_support.hpp"

using namespace ordfan;
using namespace testutil;

TEST_CASE("monomial basics") {
    auto sig = ring_xy();
    CHECK(M("x^2*y").degree() == 3);
    CHECK(M("1").degree() == 0);
    CHECK(M("x").divides(M("x^2*y")));
    CHECK_FALSE(M("x^2").divides(M("x*y^2")));
    CHECK(lcm(M("x^2"), M("x*y")) == M("x^2*y"));
    CHECK(M("x^2*y") / M("x*y") == M("x"));
    CHECK(to_string(M("x^2*y"), *sig) == "x^2*y");
}

TEST_CASE("canonical monomial order is graded reverse lexicographic") {
    // 1 < y < x < y^2 < x*y < x^2 < ...
    std::vector<Monomial> expect = {M("1"), M("y"), M("x"), M("y^2"), M("x*y"), M("x^2")};
    auto got = monomials_up_to(2, 2);
    CHECK(got == expect);
    CHECK(canonical_less(M("y^2"), M("x*y")));
    CHECK(canonical_less(M("x*y"), M("x^2")));
}

TEST_CASE("monomial enumeration counts") {
    for (int t : {1, 2, 3}) {
        for (int s : {0, 1, 3, 5}) {
            auto all = monomials_up_to(t, s);
            CHECK(Integer(static_cast<long>(all.size())) == binomial(s + t, t));
        }
    }
}

TEST_CASE("addition examples") {
    CHECK(P("x + y") + P("x - y") == P("2*x"));
    CHECK(P("x^2 - y") + Polynomial::zero(ring_xy()) == P("x^2 - y"));
    CHECK(P("x^2 - y") + P("y") == P("x^2"));
}

TEST_CASE("multiplication examples") {
    CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
    CHECK(P("1") * P("x^2 - y") == P("x^2 - y"));
    auto sig = ring_yz();
    CHECK(P("y + z", sig) * P("y + z", sig) == P("y^2 + 2*y*z + z^2", sig));
}

TEST_CASE("signature mismatch is rejected") {
    CHECK_THROWS_AS(P("x") + P("y", ring_yz()), std::invalid_argument);
    CHECK_THROWS_AS(P("x") * P("y", ring_yz()), std::invalid_argument);
}

TEST_CASE("support") {
    CHECK(Polynomial::zero(ring_xy()).support().empty());
    auto s = P("x^2 - y").support();
    CHECK(s == std::vector<Monomial>{M("y"), M("x^2")});
    CHECK(P("3/2*x*y + x*y").support() == std::vector<Monomial>{M("x*y")});
    CHECK(P("3/2*x*y + x*y").coefficient(M("x*y")) == Rational(5, 2));
}

TEST_CASE("leading term examples") {
    auto yz = ring_yz();
    // y dominates z^2 under lex with y first
    auto [m1, c1] = P("y + z^2", yz).leading_term(ord_lex());
    CHECK(m1 == M("y", yz));
    CHECK(c1 == Rational(1));

    auto [m2, c2] = P("5/2", yz).leading_term(ord_grlex());
    CHECK(m2.is_one());
    CHECK(c2 == Rational(5, 2));

    auto [m3, c3] = P("x^2 - y").leading_term(ord_grlex());
    CHECK(m3 == M("x^2"));
    CHECK(c3 == Rational(1));

    CHECK_THROWS_AS(Polynomial::zero(ring_xy()).leading_term(ord_lex()),
                    std::invalid_argument);
}

TEST_CASE("degree of zero is rejected") {
    CHECK_THROWS_AS(Polynomial::zero(ring_xy()).degree(), std::invalid_argument);
    CHECK(P("x^2*y + x").degree() == 3);
}

TEST_CASE("leading term is the support maximum and strips off") {
    std::mt19937_64 rng(11);
    auto sig = ring_xy();
    for (int k = 0; k < 200; ++k) {
        Polynomial p = random_polynomial(rng, sig, 4, 5);
        OrderingSpec ord = random_ordering(rng, 2, 4);
        auto [lm, lc] = p.leading_term(ord);
        bool in_support = false;
        for (const auto& m : p.support()) {
            if (m == lm) in_support = true;
            CHECK(ord.compare(m, lm) != Cmp::GT);
        }
        CHECK(in_support);
        Polynomial r = p - Polynomial::term(sig, lm, lc);
        if (!r.is_zero()) {
            CHECK(ord.compare(r.leading_monomial(ord), lm) == Cmp::LT);
        }
    }
}

TEST_CASE("orderings agreeing on the support agree on the leading term") {
    std::mt19937_64 rng(13);
    auto sig = ring_xy();
    for (int k = 0; k < 100; ++k) {
        Polynomial p = random_polynomial(rng, sig, 3, 4);
        OrderingSpec a = random_ordering(rng, 2, 4);
        OrderingSpec b = random_ordering(rng, 2, 4);
        bool agree = true;
        for (const auto& u : p.support()) {
            for (const auto& v : p.support()) {
                if (a.compare(u, v) != b.compare(u, v)) agree = false;
            }
        }
        if (agree) {
            CHECK(p.leading_monomial(a) == p.leading_monomial(b));
        }
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(17);
    auto sig = ring_xy();
    for (int k = 0; k < 60; ++k) {
        Polynomial a = random_polynomial(rng, sig, 3, 3, true);
        Polynomial b = random_polynomial(rng, sig, 3, 3, true);
        Polynomial c = random_polynomial(rng, sig, 3, 3, true);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
    }
}
