// Left-ideal division and Buchberger completion over algebra presentations,
// reduced bases, leading monomial ideals, degree-slice triangularization and
// the standard-monomial basis check for quotients.
#ifndef ORDFAN_GROEBNER_HPP
#define ORDFAN_GROEBNER_HPP

#include <string>
#include <vector>

#include "ordfan/algebra.hpp"
#include "ordfan/monomial_ideal.hpp"
#include "ordfan/polynomial.hpp"

namespace ordfan {

// A left ideal given by generators inside an algebra presentation. Zero
// generators are dropped and duplicates removed at construction; a list that
// normalizes to nothing describes the zero ideal.
struct IdealSpec {
    IdealSpec(AlgebraPresentation algebra, const std::vector<Polynomial>& generators);

    AlgebraPresentation algebra;
    std::vector<Polynomial> generators;
};

struct DivisionResult {
    std::vector<Polynomial> quotients;  // aligned with the divisor list
    Polynomial remainder;
};

// Deterministic division: at every step the lowest-index divisor whose
// leading monomial divides the current one is used. Requires an admissible
// ordering for which the algebra is of solvable type; the remainder has no
// support monomial divisible by any divisor's leading monomial, and every
// nonzero quotient*divisor stays at or below the input's leading monomial.
DivisionResult divide(const Polynomial& a, const std::vector<Polynomial>& divisors,
                      const OrderingSpec& ord, const AlgebraPresentation& algebra);

struct GroebnerBasis {
    std::vector<Polynomial> elements;  // monic, sorted by leading monomial descending
    OrderingSpec ordering;
    AlgebraPresentation algebra;
    bool reduced = false;
};

// S-pair saturation for left ideals. The coprime-head shortcut is applied
// only in the commutative kind.
GroebnerBasis buchberger(const IdealSpec& ideal, const OrderingSpec& ord);

// Drops elements whose head lies in the head ideal of the others, then tail
// reduces each element by the rest; output elements are monic. For a fixed
// ideal and ordering the result is independent of the input basis.
GroebnerBasis reduce_gb(const GroebnerBasis& basis);

MonomialIdeal leading_ideal(const IdealSpec& ideal, const OrderingSpec& ord);

// Heads of the nonzero members of the ideal's degree-<= s part, obtained by
// triangularizing a spanning set with columns sorted descending under ord.
// Needs a degree ordering and a commutative algebra.
std::vector<Monomial> slice_leading_monomials(const IdealSpec& ideal, const OrderingSpec& ord,
                                              int s);

struct MacaulayReport {
    bool pass = true;
    std::vector<Monomial> basis;  // standard monomials of the head ideal, up to cap
    std::vector<std::string> failures;
};

// Checks that the standard monomials of the head ideal behave like a basis
// of the quotient on all monomials of degree <= cap: remainders land in the
// span of the basis, basis elements are fixed points, and (for degree
// orderings) the dimension count matches the slice rank.
MacaulayReport macaulay_check(const IdealSpec& ideal, const OrderingSpec& ord, int cap);

std::string to_string(const GroebnerBasis& basis);

}  // namespace ordfan

#endif
