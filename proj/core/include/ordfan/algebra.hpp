// Algebra presentations on the canonical monomial basis. Multiplication is
// given by commutation relations x_j*x_i = c_ij*x_i*x_j + p_ij for j > i;
// products are brought to the normal-ordered basis by rewriting adjacent
// out-of-order variable pairs. Commutative rings, Weyl algebras and general
// solvable tables all fit this scheme.
#ifndef ORDFAN_ALGEBRA_HPP
#define ORDFAN_ALGEBRA_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ordfan/polynomial.hpp"

namespace ordfan {

enum class AlgebraKind { Commutative, Weyl, Solvable };

struct PairRelation {
    Rational c;    // nonzero
    Polynomial p;  // lower-order correction
};

class AlgebraPresentation {
public:
    static AlgebraPresentation commutative(Signature sig);
    // pairs lists (position of u, position of v) with [v, u] = v*u - u*v = 1;
    // every variable may appear in at most one pair, all other pairs commute.
    static AlgebraPresentation weyl(Signature sig, const std::vector<std::pair<int, int>>& pairs);
    // Explicit table; keys are (i, j) with i < j describing x_j*x_i.
    // Unlisted pairs commute.
    static AlgebraPresentation solvable(Signature sig,
                                        const std::map<std::pair<int, int>, PairRelation>& rels);

    const Signature& signature() const { return sig_; }
    AlgebraKind kind() const { return kind_; }
    bool is_commutative() const { return kind_ == AlgebraKind::Commutative; }

    // Relation for i < j; identity relation (c=1, p=0) when unlisted.
    const PairRelation& relation(int i, int j) const;

private:
    AlgebraPresentation(Signature sig, AlgebraKind kind)
        : sig_(std::move(sig)), kind_(kind) {}

    Signature sig_;
    AlgebraKind kind_;
    std::map<std::pair<int, int>, PairRelation> rels_;
};

// Product of a and b expressed on the canonical basis. Rewrites the leftmost
// out-of-order adjacent pair first; a step budget of 10^6 guards against
// non-terminating tables and is reported as an error when exceeded.
Polynomial normal_form_product(const AlgebraPresentation& algebra, const Polynomial& a,
                               const Polynomial& b);

struct SolvableTypeCheck {
    bool ok = true;
    int i = -1, j = -1;            // violating pair when !ok
    std::optional<Monomial> lm;    // leading monomial of the offending p_ij
};

// A presentation is of solvable type for an admissible ordering when every
// correction p_ij is zero or led by a monomial strictly below x_i*x_j.
SolvableTypeCheck check_solvable_type(const AlgebraPresentation& algebra,
                                      const OrderingSpec& ord);

struct MultiplicativityReport {
    bool ok = true;
    size_t sample_index = 0;
    std::optional<Monomial> lt_product;   // LT(a*b) of the first violation
    std::optional<Monomial> lt_pointwise; // LT(a)*LT(b)
};

// Empirical falsifier of LT(a*b) = LT(a)*LT(b) over the given sample pairs.
MultiplicativityReport check_multiplicative(
    const AlgebraPresentation& algebra, const OrderingSpec& ord,
    const std::vector<std::pair<Polynomial, Polynomial>>& samples);

}  // namespace ordfan

#endif
