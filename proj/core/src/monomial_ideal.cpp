#include "ordfan/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordfan {

MonomialIdeal MonomialIdeal::from_generators(Signature sig, const std::vector<Monomial>& gens) {
    for (const auto& g : gens) {
        if (g.num_vars() != sig->t) throw std::invalid_argument("generator arity mismatch");
    }
    std::vector<Monomial> minimal;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : gens) {
            if (h == g) continue;
            if (h.divides(g) && !(g.divides(h))) { redundant = true; break; }
            // Equal-as-monomials duplicates collapse below via the sort.
        }
        if (!redundant) minimal.push_back(g);
    }
    std::sort(minimal.begin(), minimal.end(), CanonicalLess{});
    minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
    return MonomialIdeal(std::move(sig), std::move(minimal));
}

MonomialIdeal MonomialIdeal::zero(Signature sig) { return MonomialIdeal(std::move(sig), {}); }

MonomialIdeal MonomialIdeal::unit(Signature sig) {
    int t = sig->t;
    return MonomialIdeal(std::move(sig), {Monomial::one(t)});
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && gens_.front().is_one();
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_) {
        if (g.divides(m)) return true;
    }
    return false;
}

bool MonomialIdeal::subset_of(const MonomialIdeal& o) const {
    if (!same_signature(sig_, o.sig_)) throw std::invalid_argument("ring signature mismatch");
    for (const auto& g : gens_) {
        if (!o.contains(g)) return false;
    }
    return true;
}

namespace {

constexpr size_t kMaxHilbertGenerators = 20;

// Count of monomials of degree <= s divisible by a monomial of degree d.
Integer divisible_count(int s, int d, int t) {
    if (d > s) return Integer(0);
    return binomial(s - d + t, t);
}

// Degree of the exponent-wise maximum over all generators.
int full_lcm_degree(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return 0;
    Monomial acc = ideal.generators().front();
    for (const auto& g : ideal.generators()) acc = lcm(acc, g);
    return acc.degree();
}

}  // namespace

Integer hilbert_function(const MonomialIdeal& ideal, int s) {
    if (s < 0) throw std::invalid_argument("negative degree bound");
    int t = ideal.signature()->t;
    if (ideal.is_zero()) return binomial(s + t, t);
    if (ideal.is_unit()) return Integer(0);
    const auto& gens = ideal.generators();
    if (gens.size() > kMaxHilbertGenerators)
        throw std::invalid_argument("too many generators for inclusion-exclusion");
    size_t n = gens.size();
    Integer total = binomial(s + t, t);
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
        Monomial l = Monomial::one(t);
        for (size_t i = 0; i < n; ++i) {
            if (mask & (size_t(1) << i)) l = lcm(l, gens[i]);
        }
        Integer c = divisible_count(s, l.degree(), t);
        if (__builtin_popcountll(mask) % 2 == 1) {
            total -= c;
        } else {
            total += c;
        }
    }
    return total;
}

Rational HilbertData::hp_at(long s) const {
    Rational v(0);
    Rational power(1);
    for (const auto& c : hp_coeffs) {
        v += c * power;
        power *= Rational(s);
    }
    return v;
}

HilbertData hilbert_polynomial_and_index(const MonomialIdeal& ideal) {
    int t = ideal.signature()->t;
    int max_gen_degree = 0;
    for (const auto& g : ideal.generators()) max_gen_degree = std::max(max_gen_degree, g.degree());
    // Every inclusion-exclusion term turns polynomial once s reaches
    // deg(lcm of all generators) - t; below that the truncated counts and
    // the binomial polynomials genuinely differ (e.g. <x^3, y^3> in two
    // variables agrees with its Hilbert polynomial only from s = 4 on).
    int start = std::max({max_gen_degree, full_lcm_degree(ideal) - t, 0});

    HilbertData data;
    data.s_max = start + t;
    for (int s = 0; s <= data.s_max; ++s) data.hf_values.push_back(hilbert_function(ideal, s));

    // Newton forward differences on the nodes start..start+t.
    std::vector<Rational> diffs;
    {
        std::vector<Rational> row;
        for (int k = 0; k <= t; ++k)
            row.emplace_back(data.hf_values[static_cast<size_t>(start + k)]);
        for (int level = 0; level <= t; ++level) {
            diffs.push_back(row.front());
            std::vector<Rational> next;
            for (size_t i = 0; i + 1 < row.size(); ++i) next.push_back(row[i + 1] - row[i]);
            row = std::move(next);
        }
    }
    // Expand sum_k diffs[k] * C(s - start, k) into power-basis coefficients.
    std::vector<Rational> coeffs(static_cast<size_t>(t) + 1, Rational(0));
    std::vector<Rational> basis{Rational(1)};  // product (s-start)(s-start-1).../k!
    Rational factorial(1);
    for (int k = 0; k <= t; ++k) {
        if (k > 0) {
            factorial *= Rational(k);
            // multiply basis polynomial by (s - (start + k - 1))
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            Rational shift(-(static_cast<long>(start) + k - 1));
            for (size_t i = 0; i < basis.size(); ++i) {
                next[i + 1] += basis[i];
                next[i] += basis[i] * shift;
            }
            basis = std::move(next);
        }
        Rational scale = diffs[static_cast<size_t>(k)] / factorial;
        for (size_t i = 0; i < basis.size(); ++i) coeffs[i] += basis[i] * scale;
    }
    while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
    data.hp_coeffs = std::move(coeffs);

    int ind = 0;
    for (int s = start; s >= 0; --s) {
        if (Rational(data.hf_values[static_cast<size_t>(s)]) != data.hp_at(s)) {
            ind = s + 1;
            break;
        }
    }
    data.regularity_index = ind;
    return data;
}

std::vector<Monomial> standard_monomials_up_to(const MonomialIdeal& ideal, int s) {
    if (s < 0) throw std::invalid_argument("negative degree bound");
    std::vector<Monomial> out;
    for (const auto& m : monomials_up_to(ideal.signature()->t, s)) {
        if (!ideal.contains(m)) out.push_back(m);
    }
    return out;
}

std::string to_string(const MonomialIdeal& ideal) {
    std::string s = "<";
    const auto& gens = ideal.generators();
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
        if (it != gens.rbegin()) s += ", ";
        s += to_string(*it, *ideal.signature());
    }
    return s + ">";
}

}  // namespace ordfan
