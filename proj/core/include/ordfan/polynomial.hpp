// Multivariate polynomials over the rationals on the canonical monomial
// basis. The term map never stores a zero coefficient, so the support is
// exactly the key set and the zero polynomial is the empty map. Values are
// immutable after construction apart from the arithmetic that builds new
// ones.
#ifndef ORDFAN_POLYNOMIAL_HPP
#define ORDFAN_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ordfan/monomial.hpp"
#include "ordfan/ordering.hpp"
#include "ordfan/rational.hpp"

namespace ordfan {

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, CanonicalLess>;

    explicit Polynomial(Signature sig) : sig_(std::move(sig)) {}
    Polynomial(Signature sig, TermMap terms);

    static Polynomial zero(Signature sig) { return Polynomial(std::move(sig)); }
    static Polynomial constant(Signature sig, const Rational& c);
    static Polynomial term(Signature sig, const Monomial& m, const Rational& c);
    static Polynomial variable(Signature sig, int i);

    const Signature& signature() const { return sig_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Coefficient of m, zero if absent.
    Rational coefficient(const Monomial& m) const;

    // Total degree; rejects the zero polynomial, whose degree is undefined.
    int degree() const;

    std::vector<Monomial> support() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    // Commutative product.
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_signature(a.sig_, b.sig_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Leading monomial and coefficient with respect to ord; rejects zero.
    std::pair<Monomial, Rational> leading_term(const OrderingSpec& ord) const;
    Monomial leading_monomial(const OrderingSpec& ord) const { return leading_term(ord).first; }

    // *this scaled so the leading coefficient under ord is 1.
    Polynomial monic(const OrderingSpec& ord) const;

private:
    void add_term(const Monomial& m, const Rational& c);
    void require_same_ring(const Polynomial& o) const;

    Signature sig_;
    TermMap terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul_commutative(const Polynomial& p, const Polynomial& q);

// Deterministic total order on polynomials of one ring: by leading monomial
// in the canonical order (descending), then by the full term maps.
bool canonical_poly_less(const Polynomial& a, const Polynomial& b);

}  // namespace ordfan

#endif
