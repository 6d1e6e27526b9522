// Shared helpers for the test binaries: terse constructors and seeded random
// generators for polynomials, monomial ideals and orderings.
#ifndef ORDFAN_TEST_SUPPORT_HPP
#define ORDFAN_TEST_SUPPORT_HPP

#include <ordfan/ordfan.hpp>

#include <random>
#include <vector>

namespace testutil {

using namespace ordfan;

inline Signature ring_xy() {
    static Signature sig = make_signature({"x", "y"});
    return sig;
}

inline Signature ring_yz() {
    static Signature sig = make_signature({"y", "z"});
    return sig;
}

inline Polynomial P(const std::string& text, const Signature& sig = ring_xy()) {
    return parse_polynomial(text, sig);
}

inline Monomial M(const std::string& text, const Signature& sig = ring_xy()) {
    return parse_monomial(text, sig);
}

inline OrderingSpec ord_lex(int t = 2) { return OrderingSpec(MatrixOrdering::lex(t)); }
inline OrderingSpec ord_grlex(int t = 2) { return OrderingSpec(MatrixOrdering::grlex(t)); }
inline OrderingSpec ord_grevlex(int t = 2) { return OrderingSpec(MatrixOrdering::grevlex(t)); }

inline Monomial random_monomial(std::mt19937_64& rng, int t, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> var(0, t - 1);
    std::vector<int> e(static_cast<size_t>(t), 0);
    int d = deg(rng);
    for (int k = 0; k < d; ++k) e[static_cast<size_t>(var(rng))] += 1;
    return Monomial(e);
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const Signature& sig, int max_degree,
                                    int max_terms, bool allow_zero = false) {
    std::uniform_int_distribution<int> nterms(allow_zero ? 0 : 1, max_terms);
    std::uniform_int_distribution<long> coeff(-4, 4);
    Polynomial p = Polynomial::zero(sig);
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        long c = coeff(rng);
        if (c == 0) c = 1;
        p = p + Polynomial::term(sig, random_monomial(rng, sig->t, max_degree), Rational(c));
    }
    if (!allow_zero && p.is_zero()) p = Polynomial::constant(sig, Rational(1));
    return p;
}

inline MonomialIdeal random_ideal(std::mt19937_64& rng, const Signature& sig, int max_gens,
                                  int max_degree) {
    std::uniform_int_distribution<int> ngens(0, max_gens);
    std::vector<Monomial> gens;
    int n = ngens(rng);
    for (int k = 0; k < n; ++k) gens.push_back(random_monomial(rng, sig->t, max_degree));
    return MonomialIdeal::from_generators(sig, gens);
}

// Random matrix or graded-table ordering over t variables.
inline OrderingSpec random_ordering(std::mt19937_64& rng, int t, int table_depth = 3) {
    std::uniform_int_distribution<int> kind(0, 2);
    if (kind(rng) == 0) {
        std::vector<std::vector<Monomial>> slices;
        slices.push_back({Monomial::one(t)});
        for (int d = 1; d <= table_depth; ++d) {
            auto s = monomials_of_degree(t, d);
            std::shuffle(s.begin(), s.end(), rng);
            slices.push_back(std::move(s));
        }
        return OrderingSpec(
            GradedTableOrdering(t, std::move(slices), MatrixOrdering::grlex(t)));
    }
    return OrderingSpec(random_matrix_orderings(t, 5, 1, rng())[0]);
}

}  // namespace testutil

#endif
