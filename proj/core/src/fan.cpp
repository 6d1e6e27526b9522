#include "ordfan/fan.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ordfan/session.hpp"

namespace ordfan {

namespace {

// Adds the ordering's leading ideal unless an equal ideal is already listed.
bool absorb(FanResult& fan, const IdealSpec& ideal, const OrderingSpec& ord, bool keep_gb) {
    GroebnerBasis rgb = reduce_gb(buchberger(ideal, ord));
    std::vector<Monomial> heads;
    heads.reserve(rgb.elements.size());
    for (const auto& e : rgb.elements) heads.push_back(e.leading_monomial(ord));
    MonomialIdeal lm = MonomialIdeal::from_generators(ideal.algebra.signature(), heads);
    for (const auto& entry : fan.entries) {
        if (entry.ideal == lm) return false;
    }
    FanEntry entry{ord, lm, std::nullopt};
    if (keep_gb) entry.gb = std::move(rgb);
    fan.entries.push_back(std::move(entry));
    return true;
}

}  // namespace

FanResult enumerate_leading_ideals_admissible(const IdealSpec& ideal, int weight_bound,
                                              int rounds, std::uint64_t seed) {
    if (weight_bound < 1) throw std::invalid_argument("weight bound must be >= 1");
    int t = ideal.algebra.signature()->t;
    FanResult fan;
    fan.config = FanConfig{weight_bound, rounds, seed, 0};
    bool last_level_fresh = false;
    for (int level = 1; level <= weight_bound; ++level) {
        bool fresh = false;
        for (const auto& m : sample_matrix_orderings_at_level(t, level)) {
            fresh = absorb(fan, ideal, OrderingSpec(m), true) || fresh;
        }
        last_level_fresh = fresh;
    }
    for (const auto& m : random_matrix_orderings(t, 4L * weight_bound, rounds, seed)) {
        absorb(fan, ideal, OrderingSpec(m), true);
    }
    fan.exhausted = weight_bound > 1 && !last_level_fresh;
    return fan;
}

FanResult minimal_leading_ideals(const FanResult& fan) {
    FanResult out;
    out.config = fan.config;
    out.exhausted = fan.exhausted;
    for (const auto& e : fan.entries) {
        bool minimal = true;
        for (const auto& f : fan.entries) {
            if (f.ideal != e.ideal && f.ideal.subset_of(e.ideal)) { minimal = false; break; }
        }
        if (minimal) out.entries.push_back(e);
    }
    return out;
}

FanResult enumerate_leading_ideals_degree(const IdealSpec& ideal, int depth) {
    if (!ideal.algebra.is_commutative())
        throw std::invalid_argument("graded-table sweep needs a commutative algebra");
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    int t = ideal.algebra.signature()->t;

    // Permutation count guard before any enumeration.
    double total = 1.0;
    std::vector<std::vector<Monomial>> base_slices;
    base_slices.push_back({Monomial::one(t)});
    for (int d = 1; d <= depth; ++d) {
        auto s = monomials_of_degree(t, d);
        for (size_t k = 2; k <= s.size(); ++k) total *= static_cast<double>(k);
        base_slices.push_back(std::move(s));
    }
    if (total > 1e6)
        throw std::invalid_argument("graded-table sweep too large; use a smaller depth");

    MatrixOrdering fallback = MatrixOrdering::grlex(t);
    FanResult fan;
    fan.config = FanConfig{0, 0, 0, depth};

    // Odometer over per-degree permutations, each cycled with
    // next_permutation from the canonical ascending start.
    std::vector<std::vector<Monomial>> state = base_slices;
    auto advance = [&]() -> bool {
        for (size_t d = 1; d < state.size(); ++d) {
            auto cmp = CanonicalLess{};
            if (std::next_permutation(state[d].begin(), state[d].end(),
                                      [&](const Monomial& a, const Monomial& b) {
                                          return cmp(a, b);
                                      })) {
                return true;
            }
            // wrapped to the ascending start; carry to the next degree
        }
        return false;
    };

    do {
        GradedTableOrdering table(t, state, fallback);
        OrderingSpec ord{table};
        auto heads = slice_leading_monomials(ideal, ord, depth);
        MonomialIdeal lm = MonomialIdeal::from_generators(ideal.algebra.signature(), heads);
        bool seen = false;
        for (const auto& entry : fan.entries) {
            if (entry.ideal == lm) { seen = true; break; }
        }
        if (!seen) fan.entries.push_back(FanEntry{ord, lm, std::nullopt});
    } while (advance());

    fan.exhausted = true;
    return fan;
}

std::vector<Polynomial> universal_gb(const IdealSpec& ideal, const FanResult& fan) {
    OrderingSpec canon{MatrixOrdering::grevlex(ideal.algebra.signature()->t)};
    std::vector<Polynomial> out;
    for (const auto& entry : fan.entries) {
        if (!entry.gb)
            throw std::invalid_argument("fan entries carry no bases to merge");
        for (const auto& g : entry.gb->elements) {
            Polynomial n = g.monic(canon);
            if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
        }
    }
    std::sort(out.begin(), out.end(), canonical_poly_less);
    return out;
}

VerifyReport verify_universal(const std::vector<Polynomial>& universal, const IdealSpec& ideal,
                              const std::vector<OrderingSpec>& orderings) {
    VerifyReport rep;
    for (const auto& ord : orderings) {
        ++rep.checked;
        GroebnerBasis rgb = reduce_gb(buchberger(ideal, ord));
        std::vector<Monomial> true_heads;
        for (const auto& e : rgb.elements) true_heads.push_back(e.leading_monomial(ord));
        MonomialIdeal truth =
            MonomialIdeal::from_generators(ideal.algebra.signature(), true_heads);

        std::vector<Monomial> cand_heads;
        for (const auto& u : universal) {
            if (!u.is_zero()) cand_heads.push_back(u.leading_monomial(ord));
        }
        MonomialIdeal cand =
            MonomialIdeal::from_generators(ideal.algebra.signature(), cand_heads);

        if (cand != truth) {
            rep.pass = false;
            rep.failures.push_back(
                {ord, "head ideal " + to_string(cand) + " differs from " + to_string(truth)});
            continue;
        }
        for (const auto& u : universal) {
            if (rgb.elements.empty() ||
                !divide(u, rgb.elements, ord, ideal.algebra).remainder.is_zero()) {
                rep.pass = false;
                rep.failures.push_back({ord, "element " + to_string(u) + " is not in the ideal"});
                break;
            }
        }
    }
    return rep;
}

Integer degree_bound_quadric(int d, int t) {
    if (d < 1 || t < 1) throw std::invalid_argument("bound needs d >= 1 and t >= 1");
    Rational base(static_cast<long>(d) * d + 2L * d, 2);
    Integer exp;
    mpz_ui_pow_ui(exp.get_mpz_t(), 2, static_cast<unsigned long>(t - 1));
    if (!exp.fits_ulong_p()) throw std::invalid_argument("bound exponent too large");
    Rational value = Rational(2) * base.pow(exp.get_ui());
    return value.ceil();
}

std::string to_report(const FanResult& fan) {
    std::ostringstream os;
    os << "entries=" << fan.entries.size() << " exhausted=" << (fan.exhausted ? "true" : "false");
    if (fan.config.depth > 0) {
        os << " depth=" << fan.config.depth;
    } else {
        os << " weight-bound=" << fan.config.weight_bound
           << " rounds=" << fan.config.stability_rounds;
        if (fan.config.stability_rounds > 0) os << " seed=" << fan.config.seed;
    }
    os << "\n";
    for (const auto& e : fan.entries) {
        os << "ideal=" << to_string(e.ideal) << " witness="
           << to_string(e.witness, *e.ideal.signature());
        if (e.gb) os << " gb=" << to_string(*e.gb);
        os << "\n";
    }
    return os.str();
}

}  // namespace ordfan
