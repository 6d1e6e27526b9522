#include "ordfan/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordfan {

namespace {

constexpr long kRewriteBudget = 1000000;
// Intermediate words far beyond any desk-scale product degree signal a table
// whose corrections feed themselves.
constexpr size_t kMaxWordLength = 512;

const PairRelation& identity_relation(const Signature& sig) {
    static thread_local std::map<const RingSignature*, PairRelation> cache;
    auto it = cache.find(sig.get());
    if (it == cache.end()) {
        it = cache.emplace(sig.get(), PairRelation{Rational(1), Polynomial::zero(sig)}).first;
    }
    return it->second;
}

}  // namespace

AlgebraPresentation AlgebraPresentation::commutative(Signature sig) {
    return AlgebraPresentation(std::move(sig), AlgebraKind::Commutative);
}

AlgebraPresentation AlgebraPresentation::weyl(Signature sig,
                                              const std::vector<std::pair<int, int>>& pairs) {
    AlgebraPresentation a(sig, AlgebraKind::Weyl);
    std::vector<bool> used(static_cast<size_t>(sig->t), false);
    for (auto [u, v] : pairs) {
        if (u < 0 || v < 0 || u >= sig->t || v >= sig->t || u == v)
            throw std::invalid_argument("bad variable pair");
        if (used[static_cast<size_t>(u)] || used[static_cast<size_t>(v)])
            throw std::invalid_argument("variable appears in two pairs");
        used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = true;
        // [v, u] = 1. Stored for positions (i, j), i < j, as x_j*x_i = x_i*x_j + p.
        if (u < v) {
            a.rels_.insert_or_assign({u, v}, PairRelation{Rational(1), Polynomial::constant(sig, Rational(1))});
        } else {
            a.rels_.insert_or_assign({v, u}, PairRelation{Rational(1), Polynomial::constant(sig, Rational(-1))});
        }
    }
    return a;
}

AlgebraPresentation AlgebraPresentation::solvable(
    Signature sig, const std::map<std::pair<int, int>, PairRelation>& rels) {
    AlgebraPresentation a(sig, AlgebraKind::Solvable);
    for (const auto& [key, rel] : rels) {
        auto [i, j] = key;
        if (!(0 <= i && i < j && j < sig->t)) throw std::invalid_argument("bad relation pair");
        if (rel.c.is_zero()) throw std::invalid_argument("relation scalar must be a unit");
        if (!same_signature(rel.p.signature(), sig))
            throw std::invalid_argument("relation polynomial over wrong ring");
        a.rels_.insert_or_assign(key, rel);
    }
    return a;
}

const PairRelation& AlgebraPresentation::relation(int i, int j) const {
    auto it = rels_.find({i, j});
    if (it != rels_.end()) return it->second;
    return identity_relation(sig_);
}

namespace {

using Word = std::vector<int>;  // variable indices, normal when nondecreasing

Word word_of(const Monomial& m) {
    Word w;
    for (int i = 0; i < m.num_vars(); ++i) {
        for (int k = 0; k < m.exponent(i); ++k) w.push_back(i);
    }
    return w;
}

Monomial monomial_of(const Word& w, int t) {
    std::vector<int> e(static_cast<size_t>(t), 0);
    for (int i : w) e[static_cast<size_t>(i)] += 1;
    return Monomial(std::move(e));
}

// Basis product n_u * n_v written on the basis.
Polynomial basis_product(const AlgebraPresentation& algebra, const Monomial& u,
                         const Monomial& v) {
    const Signature& sig = algebra.signature();
    int t = sig->t;
    Word start = word_of(u);
    {
        Word wv = word_of(v);
        start.insert(start.end(), wv.begin(), wv.end());
    }
    std::map<Word, Rational> pending;
    pending.emplace(std::move(start), Rational(1));
    Polynomial out = Polynomial::zero(sig);
    long steps = 0;
    while (!pending.empty()) {
        auto node = pending.begin();
        Word w = node->first;
        Rational coeff = node->second;
        pending.erase(node);
        if (coeff.is_zero()) continue;
        size_t k = 0;
        while (k + 1 < w.size() && w[k] <= w[k + 1]) ++k;
        if (k + 1 >= w.size()) {
            out = out + Polynomial::term(sig, monomial_of(w, t), coeff);
            continue;
        }
        if (++steps > kRewriteBudget || w.size() > kMaxWordLength) {
            throw std::runtime_error(
                "rewrite budget exceeded: presentation is not of solvable type");
        }
        int j = w[k], i = w[k + 1];  // j > i
        const PairRelation& rel = algebra.relation(i, j);
        Word swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        auto bump = [&](Word key, const Rational& c) {
            auto [it, inserted] = pending.emplace(std::move(key), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) pending.erase(it);
            }
        };
        bump(std::move(swapped), coeff * rel.c);
        for (const auto& [m, c] : rel.p.terms()) {
            Word mid(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
            Word wm = word_of(m);
            mid.insert(mid.end(), wm.begin(), wm.end());
            mid.insert(mid.end(), w.begin() + static_cast<std::ptrdiff_t>(k) + 2, w.end());
            bump(std::move(mid), coeff * c);
        }
    }
    return out;
}

}  // namespace

Polynomial normal_form_product(const AlgebraPresentation& algebra, const Polynomial& a,
                               const Polynomial& b) {
    if (!same_signature(a.signature(), algebra.signature()) ||
        !same_signature(b.signature(), algebra.signature()))
        throw std::invalid_argument("ring signature mismatch");
    if (algebra.is_commutative()) return a * b;
    Polynomial out = Polynomial::zero(algebra.signature());
    for (const auto& [u, cu] : a.terms()) {
        for (const auto& [v, cv] : b.terms()) {
            out = out + basis_product(algebra, u, v).scaled(cu * cv);
        }
    }
    return out;
}

SolvableTypeCheck check_solvable_type(const AlgebraPresentation& algebra,
                                      const OrderingSpec& ord) {
    if (classify(ord).admissible != Tri::Yes)
        throw std::invalid_argument("solvable-type check needs an admissible ordering");
    SolvableTypeCheck res;
    int t = algebra.signature()->t;
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            const PairRelation& rel = algebra.relation(i, j);
            if (rel.p.is_zero()) continue;
            Monomial xij = Monomial::variable(t, i) * Monomial::variable(t, j);
            Monomial lm = rel.p.leading_monomial(ord);
            if (ord.compare(lm, xij) != Cmp::LT) {
                res.ok = false;
                res.i = i;
                res.j = j;
                res.lm = lm;
                return res;
            }
        }
    }
    return res;
}

MultiplicativityReport check_multiplicative(
    const AlgebraPresentation& algebra, const OrderingSpec& ord,
    const std::vector<std::pair<Polynomial, Polynomial>>& samples) {
    MultiplicativityReport rep;
    for (size_t k = 0; k < samples.size(); ++k) {
        const auto& [a, b] = samples[k];
        if (a.is_zero() || b.is_zero())
            throw std::invalid_argument("multiplicativity samples must be nonzero");
        Polynomial ab = normal_form_product(algebra, a, b);
        Monomial pointwise = a.leading_monomial(ord) * b.leading_monomial(ord);
        if (ab.is_zero() || ab.leading_monomial(ord) != pointwise) {
            rep.ok = false;
            rep.sample_index = k;
            if (!ab.is_zero()) rep.lt_product = ab.leading_monomial(ord);
            rep.lt_pointwise = pointwise;
            return rep;
        }
    }
    return rep;
}

}  // namespace ordfan
