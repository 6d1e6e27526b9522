#include "ordfan/polynomial.hpp"

#include <stdexcept>

namespace ordfan {

Polynomial::Polynomial(Signature sig, TermMap terms) : sig_(std::move(sig)) {
    for (auto& [m, c] : terms) {
        if (m.num_vars() != sig_->t) throw std::invalid_argument("monomial arity mismatch");
        if (!c.is_zero()) terms_.emplace(m, c);
    }
}

Polynomial Polynomial::constant(Signature sig, const Rational& c) {
    Polynomial p(std::move(sig));
    if (!c.is_zero()) p.terms_.emplace(Monomial::one(p.sig_->t), c);
    return p;
}

Polynomial Polynomial::term(Signature sig, const Monomial& m, const Rational& c) {
    Polynomial p(std::move(sig));
    if (m.num_vars() != p.sig_->t) throw std::invalid_argument("monomial arity mismatch");
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

Polynomial Polynomial::variable(Signature sig, int i) {
    int t = sig->t;
    return term(std::move(sig), Monomial::variable(t, i), Rational(1));
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
    if (is_zero()) throw std::invalid_argument("degree of the zero polynomial is undefined");
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::vector<Monomial> Polynomial::support() const {
    std::vector<Monomial> s;
    s.reserve(terms_.size());
    for (const auto& [m, c] : terms_) s.push_back(m);
    return s;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::require_same_ring(const Polynomial& o) const {
    if (!same_signature(sig_, o.sig_)) throw std::invalid_argument("ring signature mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(sig_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(o);
    Polynomial r(sig_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            r.add_term(m1 * m2, c1 * c2);
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(sig_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const OrderingSpec& ord) const {
    if (is_zero()) throw std::invalid_argument("leading term of zero");
    if (ord.t() != sig_->t) throw std::invalid_argument("ordering arity mismatch");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        if (ord.compare(best->first, it->first) == Cmp::LT) best = it;
    }
    return {best->first, best->second};
}

Polynomial Polynomial::monic(const OrderingSpec& ord) const {
    return scaled(leading_term(ord).second.inverse());
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul_commutative(const Polynomial& p, const Polynomial& q) { return p * q; }

bool canonical_poly_less(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && !b.is_zero();
    const Monomial& la = a.terms().rbegin()->first;
    const Monomial& lb = b.terms().rbegin()->first;
    if (la != lb) return canonical_less(lb, la);
    auto ai = a.terms().rbegin(), bi = b.terms().rbegin();
    for (; ai != a.terms().rend() && bi != b.terms().rend(); ++ai, ++bi) {
        if (ai->first != bi->first) return canonical_less(bi->first, ai->first);
        if (ai->second != bi->second) return ai->second < bi->second;
    }
    return a.term_count() < b.term_count();
}

}  // namespace ordfan
