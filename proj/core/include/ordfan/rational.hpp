// Exact rational scalars backed by GNU MP. Values are kept canonical at all
// times: lowest terms, denominator positive, zero stored as 0/1.
#ifndef ORDFAN_RATIONAL_HPP
#define ORDFAN_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace ordfan {

using Integer = mpz_class;

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit on purpose
    explicit Rational(const Integer& n) : q_(n) {}

    // num/den, reduced; throws std::invalid_argument on zero denominator.
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    const Integer& numerator() const { return num_ref(); }
    const Integer& denominator() const { return den_ref(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    // Multiplicative inverse; throws on zero.
    Rational inverse() const;

    Rational pow(unsigned long e) const;

    // Smallest Integer >= *this.
    Integer ceil() const;

    // "7", "-3/2", "0".
    std::string str() const;

private:
    mpq_class q_;

    const Integer& num_ref() const;
    const Integer& den_ref() const;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Binomial coefficient C(n, k); zero when n < 0, k < 0 or k > n.
Integer binomial(long n, long k);

}  // namespace ordfan

#endif
