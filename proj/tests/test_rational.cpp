#include <doctest.h>

#include <random>

#include "test_support.hpp"

using namespace ordfan;

TEST_CASE("rationals are canonical") {
    Rational r(4, 6);
    CHECK(r.numerator() == 2);
    CHECK(r.denominator() == 3);

    Rational n(3, -6);
    CHECK(n.numerator() == -1);
    CHECK(n.denominator() == 2);

    CHECK(Rational(0, 5) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic and printing") {
    Rational a(3, 2), b(1, 2);
    CHECK((a + b) == Rational(2));
    CHECK((a - b) == Rational(1));
    CHECK((a * b) == Rational(3, 4));
    CHECK((a / b) == Rational(3));
    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
    CHECK(a.inverse() == Rational(2, 3));
    CHECK((-a).str() == "-3/2");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("pow and ceil") {
    CHECK(Rational(3, 2).pow(2) == Rational(9, 4));
    CHECK(Rational(9, 4).ceil() == 3);
    CHECK(Rational(2).ceil() == 2);
    CHECK(Rational(-9, 4).ceil() == -2);
}

TEST_CASE("lowest terms survive random arithmetic") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-30, 30);
    for (int k = 0; k < 300; ++k) {
        long n1 = d(rng), n2 = d(rng);
        long d1 = d(rng), d2 = d(rng);
        if (d1 == 0 || d2 == 0) continue;
        Rational a(n1, d1), b(n2, d2);
        for (Rational v : {a + b, a - b, a * b}) {
            CHECK(v.denominator() > 0);
            Integer g;
            mpz_gcd(g.get_mpz_t(), v.numerator().get_mpz_t(), v.denominator().get_mpz_t());
            CHECK(g == 1);
        }
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 2) == 0);
}
