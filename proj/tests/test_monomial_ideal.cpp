#include <doctest.h>

#include <random>

#include "test_support.hpp"

using namespace ordfan;
using namespace testutil;

namespace {

// Brute-force count of monomials of degree <= s outside the ideal; the
// independent oracle for the inclusion-exclusion path.
long hf_by_enumeration(const MonomialIdeal& ideal, int s) {
    long n = 0;
    for (const auto& m : monomials_up_to(ideal.signature()->t, s)) {
        if (!ideal.contains(m)) ++n;
    }
    return n;
}

MonomialIdeal ideal_of(std::initializer_list<const char*> gens,
                       const Signature& sig = ring_xy()) {
    std::vector<Monomial> ms;
    for (const char* g : gens) ms.push_back(parse_monomial(g, sig));
    return MonomialIdeal::from_generators(sig, ms);
}

}  // namespace

TEST_CASE("minimal generators") {
    CHECK(ideal_of({"x^2", "x^3"}).generators() == std::vector<Monomial>{M("x^2")});
    CHECK(MonomialIdeal::from_generators(ring_xy(), {}).is_zero());
    auto I = ideal_of({"x*y", "x^2", "y^2", "x^2*y"});
    CHECK(I.generators() == std::vector<Monomial>{M("y^2"), M("x*y"), M("x^2")});
    CHECK(ideal_of({"1", "x"}).is_unit());
    CHECK(ideal_of({"x", "x"}).generators().size() == 1);
}

TEST_CASE("membership") {
    auto I = ideal_of({"x^2"});
    CHECK(I.contains(M("x^2*y")));
    CHECK_FALSE(I.contains(M("x*y")));
    CHECK(ideal_of({"x*y", "y^3"}).contains(M("y^4")));
    CHECK_FALSE(MonomialIdeal::zero(ring_xy()).contains(M("1")));
    CHECK(MonomialIdeal::unit(ring_xy()).contains(M("1")));
}

TEST_CASE("inclusion and equality") {
    CHECK(ideal_of({"x^2"}).subset_of(ideal_of({"x"})));
    CHECK_FALSE(ideal_of({"x^2"}).subset_of(ideal_of({"y"})));
    CHECK_FALSE(ideal_of({"y"}).subset_of(ideal_of({"x^2"})));
    CHECK(ideal_of({"x^2", "x*y"}) == ideal_of({"x*y", "x^2"}));
    CHECK(to_string(ideal_of({"x^2", "x*y"})) == "<x^2, x*y>");
    CHECK(to_string(MonomialIdeal::zero(ring_xy())) == "<>");
}

TEST_CASE("hilbert function examples") {
    CHECK(hilbert_function(MonomialIdeal::zero(ring_xy()), 3) == 10);
    CHECK(hilbert_function(MonomialIdeal::unit(ring_xy()), 7) == 0);
    CHECK(hilbert_function(ideal_of({"x^2", "x*y"}), 2) == 4);
}

TEST_CASE("hilbert function matches enumeration on random ideals") {
    std::mt19937_64 rng(31);
    for (int t : {1, 2, 3}) {
        auto sig = make_signature(t);
        for (int k = 0; k < 40; ++k) {
            auto I = random_ideal(rng, sig, 4, 4);
            for (int s = 0; s <= 6; ++s) {
                CHECK(hilbert_function(I, s) == Integer(hf_by_enumeration(I, s)));
            }
        }
    }
}

TEST_CASE("generator guard") {
    std::vector<Monomial> many;
    for (int i = 0; i <= 21; ++i) {
        std::vector<int> e = {i, 21 - i + 1};
        many.emplace_back(e);
    }
    auto I = MonomialIdeal::from_generators(ring_xy(), many);
    REQUIRE(I.generators().size() > 20);
    CHECK_THROWS_AS(hilbert_function(I, 3), std::invalid_argument);
}

TEST_CASE("hilbert polynomial and regularity index") {
    SUBCASE("staircase with a free tail") {
        auto d = hilbert_polynomial_and_index(ideal_of({"x^2", "x*y"}));
        REQUIRE(d.hp_coeffs.size() == 2);
        CHECK(d.hp_coeffs[0] == Rational(2));
        CHECK(d.hp_coeffs[1] == Rational(1));  // HP(s) = s + 2
        CHECK(d.regularity_index == 1);
        CHECK(d.hf_values[0] == 1);
    }
    SUBCASE("zero ideal in one variable") {
        auto sig1 = make_signature({"x"});
        auto d = hilbert_polynomial_and_index(MonomialIdeal::zero(sig1));
        REQUIRE(d.hp_coeffs.size() == 2);
        CHECK(d.hp_coeffs[0] == Rational(1));
        CHECK(d.hp_coeffs[1] == Rational(1));  // HP(s) = s + 1
        CHECK(d.regularity_index == 0);
    }
    SUBCASE("principal maximal ideal in one variable") {
        auto sig1 = make_signature({"x"});
        auto d = hilbert_polynomial_and_index(
            MonomialIdeal::from_generators(sig1, {parse_monomial("x", sig1)}));
        REQUIRE(d.hp_coeffs.size() == 1);
        CHECK(d.hp_coeffs[0] == Rational(1));
        CHECK(d.regularity_index == 0);
    }
    SUBCASE("box ideal whose function settles late") {
        // <x^3, y^3>: counts 1,3,6,8,9,9,... so the polynomial value 9 is
        // first correct at s = 4, past both generator degrees.
        auto d = hilbert_polynomial_and_index(ideal_of({"x^3", "y^3"}));
        REQUIRE(d.hp_coeffs.size() == 1);
        CHECK(d.hp_coeffs[0] == Rational(9));
        CHECK(d.regularity_index == 4);
        CHECK(hilbert_function(ideal_of({"x^3", "y^3"}), 3) == 8);
    }
    SUBCASE("unit ideal") {
        auto d = hilbert_polynomial_and_index(MonomialIdeal::unit(ring_xy()));
        REQUIRE(d.hp_coeffs.size() == 1);
        CHECK(d.hp_coeffs[0] == Rational(0));
        CHECK(d.regularity_index == 0);
    }
}

TEST_CASE("hilbert data invariant: agreement from the index onward") {
    std::mt19937_64 rng(37);
    for (int k = 0; k < 60; ++k) {
        auto sig = make_signature(2 + (k % 2));
        auto I = random_ideal(rng, sig, 4, 4);
        auto d = hilbert_polynomial_and_index(I);
        for (int s = d.regularity_index; s <= d.s_max; ++s) {
            CHECK(Rational(hilbert_function(I, s)) == d.hp_at(s));
        }
        if (d.regularity_index > 0) {
            CHECK(Rational(hilbert_function(I, d.regularity_index - 1)) !=
                  d.hp_at(d.regularity_index - 1));
        }
    }
}

TEST_CASE("standard monomials") {
    auto B = standard_monomials_up_to(ideal_of({"x^2", "x*y"}), 2);
    CHECK(B == std::vector<Monomial>{M("1"), M("y"), M("x"), M("y^2")});
    CHECK(standard_monomials_up_to(MonomialIdeal::unit(ring_xy()), 5).empty());
    auto sig1 = make_signature({"x"});
    CHECK(standard_monomials_up_to(MonomialIdeal::zero(sig1), 2).size() == 3);
}

TEST_CASE("count consistency between the two sides of the staircase") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 40; ++k) {
        auto I = random_ideal(rng, ring_xy(), 4, 4);
        for (int s = 0; s <= 5; ++s) {
            long inside = 0;
            for (const auto& m : monomials_up_to(2, s)) {
                if (I.contains(m)) ++inside;
            }
            CHECK(Integer(static_cast<long>(standard_monomials_up_to(I, s).size()) + inside) ==
                  binomial(s + 2, 2));
        }
    }
}

TEST_CASE("regularity under inclusion: the general bound fails, the artinian one holds") {
    // Inclusion alone does not bound the index: <x^2> sits inside
    // <x^2, y^2>, its count 2s+1 is already polynomial at s = 0, yet the
    // bigger ideal only settles at s = 2.
    auto I0 = ideal_of({"x^2"});
    auto J0 = ideal_of({"x^2", "y^2"});
    REQUIRE(I0.subset_of(J0));
    CHECK(hilbert_polynomial_and_index(I0).regularity_index == 0);
    CHECK(hilbert_polynomial_and_index(J0).regularity_index == 2);

    // When both ideals contain a power of every variable, the index is the
    // top degree of the finite staircase and inclusion reverses it.
    std::mt19937_64 rng(43);
    for (int k = 0; k < 80; ++k) {
        int t = 1 + (k % 3);
        auto sig = make_signature(t);
        std::vector<Monomial> ig;
        for (int i = 0; i < t; ++i)
            ig.push_back(Monomial::variable(t, i, 1 + static_cast<int>(rng() % 4)));
        ig.push_back(random_monomial(rng, t, 4));
        auto I = MonomialIdeal::from_generators(sig, ig);
        std::vector<Monomial> jg = I.generators();
        jg.push_back(random_monomial(rng, t, 4));
        auto J = MonomialIdeal::from_generators(sig, jg);
        REQUIRE(I.subset_of(J));
        CHECK(hilbert_polynomial_and_index(I).regularity_index >=
              hilbert_polynomial_and_index(J).regularity_index);
    }
}

TEST_CASE("counting function is rigid under strict inclusion") {
    std::mt19937_64 rng(44);
    int strict_pairs = 0;
    for (int k = 0; k < 120; ++k) {
        int t = 1 + (k % 3);
        auto sig = make_signature(t);
        auto J = random_ideal(rng, sig, 4, 4);
        if (J.is_zero()) continue;
        // multiplying each generator by a random monomial gives I inside J
        std::vector<Monomial> gens;
        for (const auto& g : J.generators()) {
            gens.push_back(g * random_monomial(rng, t, 2));
        }
        auto I = MonomialIdeal::from_generators(sig, gens);
        REQUIRE(I.subset_of(J));
        if (I != J) {
            ++strict_pairs;
            int sJ = 0;
            for (const auto& g : J.generators()) sJ = std::max(sJ, g.degree());
            bool differs = false;
            for (int s = 0; s <= sJ + t + 1 && !differs; ++s) {
                differs = hilbert_function(I, s) != hilbert_function(J, s);
            }
            CHECK(differs);
        }
    }
    CHECK(strict_pairs > 30);
}
