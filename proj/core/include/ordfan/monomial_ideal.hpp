// Monomial ideals stored by their minimal generators, with membership,
// inclusion, the Hilbert function counting monomials of bounded degree
// outside the ideal, the Hilbert polynomial and the index of regularity.
#ifndef ORDFAN_MONOMIAL_IDEAL_HPP
#define ORDFAN_MONOMIAL_IDEAL_HPP

#include <string>
#include <vector>

#include "ordfan/monomial.hpp"
#include "ordfan/rational.hpp"

namespace ordfan {

class MonomialIdeal {
public:
    // Discards every monomial divisible by another one in the set. The empty
    // set is the zero ideal, {1} the unit ideal.
    static MonomialIdeal from_generators(Signature sig, const std::vector<Monomial>& gens);
    static MonomialIdeal zero(Signature sig);
    static MonomialIdeal unit(Signature sig);

    const Signature& signature() const { return sig_; }
    // Minimal generators, canonically sorted ascending.
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;

    bool contains(const Monomial& m) const;
    bool subset_of(const MonomialIdeal& o) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return same_signature(a.sig_, b.sig_) && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

private:
    MonomialIdeal(Signature sig, std::vector<Monomial> gens)
        : sig_(std::move(sig)), gens_(std::move(gens)) {}

    Signature sig_;
    std::vector<Monomial> gens_;
};

// Number of monomials of degree <= s outside the ideal, computed by
// inclusion-exclusion over generator subsets. Rejects ideals with more than
// 20 generators; the subset walk is exponential and meant for small inputs.
Integer hilbert_function(const MonomialIdeal& ideal, int s);

struct HilbertData {
    std::vector<Integer> hf_values;   // values at s = 0..s_max
    std::vector<Rational> hp_coeffs;  // polynomial coefficients, constant term first
    int regularity_index = 0;
    int s_max = 0;

    Rational hp_at(long s) const;
};

// Interpolates the Hilbert polynomial on a window where the counting formula
// is already polynomial and scans downward for the first disagreement with
// the Hilbert function.
HilbertData hilbert_polynomial_and_index(const MonomialIdeal& ideal);

// Monomials of degree <= s outside the ideal, canonically sorted ascending.
std::vector<Monomial> standard_monomials_up_to(const MonomialIdeal& ideal, int s);

// "<x^2, x*y>" with the generators in canonical descending order; "<>" for
// the zero ideal.
std::string to_string(const MonomialIdeal& ideal);

}  // namespace ordfan

#endif
