// Ring signatures and monomials. A monomial is a bare exponent vector; the
// signature carries the variable count and names and is shared by value
// types that need to agree on the ambient ring.
#ifndef ORDFAN_MONOMIAL_HPP
#define ORDFAN_MONOMIAL_HPP

#include <memory>
#include <string>
#include <vector>

namespace ordfan {

struct RingSignature {
    int t = 0;
    std::vector<std::string> var_names;

    bool operator==(const RingSignature& o) const {
        return t == o.t && var_names == o.var_names;
    }

    // Index of a declared variable name, -1 if absent.
    int index_of(const std::string& name) const;
};

using Signature = std::shared_ptr<const RingSignature>;

// Validates name count/uniqueness/grammar and freezes the signature.
Signature make_signature(std::vector<std::string> names);
// Variables named x1..xt.
Signature make_signature(int t);

bool same_signature(const Signature& a, const Signature& b);

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);
    static Monomial one(int t) { return Monomial(std::vector<int>(t, 0)); }
    static Monomial variable(int t, int i, int power = 1);

    int num_vars() const { return static_cast<int>(e_.size()); }
    int exponent(int i) const { return e_[static_cast<size_t>(i)]; }
    const std::vector<int>& exponents() const { return e_; }
    int degree() const;
    bool is_one() const;

    bool divides(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;
    // Exact quotient; caller must ensure o.divides(*this).
    Monomial operator/(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

private:
    std::vector<int> e_;
};

Monomial lcm(const Monomial& a, const Monomial& b);

// Fixed canonical comparison used for all sorted output: degree first, then
// reverse lexicographic on the natural variable order (the last variable in
// which the exponents differ decides, larger exponent there meaning smaller).
bool canonical_less(const Monomial& a, const Monomial& b);

struct CanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return canonical_less(a, b);
    }
};

// All monomials of the given exact degree, canonically sorted ascending.
std::vector<Monomial> monomials_of_degree(int t, int d);
// All monomials of degree <= s, canonically sorted ascending.
std::vector<Monomial> monomials_up_to(int t, int s);

// "x^2*y", "1" for the empty exponent vector.
std::string to_string(const Monomial& m, const RingSignature& sig);

}  // namespace ordfan

#endif
