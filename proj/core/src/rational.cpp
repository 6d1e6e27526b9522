#include "ordfan/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace ordfan {

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

const Integer& Rational::num_ref() const { return q_.get_num(); }
const Integer& Rational::den_ref() const { return q_.get_den(); }

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("division by zero rational");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero rational");
    return Rational(denominator(), numerator());
}

Rational Rational::pow(unsigned long e) const {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), numerator().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), denominator().get_mpz_t(), e);
    return Rational(n, d);
}

Integer Rational::ceil() const {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
    return r;
}

std::string Rational::str() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace ordfan
