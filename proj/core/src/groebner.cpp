#include "ordfan/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ordfan/session.hpp"

namespace ordfan {

namespace {

constexpr size_t kMaxBasisSize = 512;
constexpr long kMaxPairSteps = 200000;

void require_admissible(const OrderingSpec& ord) {
    bool ok = ord.is_matrix() ? ord.matrix().is_admissible()
                              : classify(ord).admissible == Tri::Yes;
    if (!ok) throw std::invalid_argument("operation needs an admissible ordering");
}

void require_solvable(const AlgebraPresentation& algebra, const OrderingSpec& ord) {
    if (algebra.is_commutative()) return;
    if (!check_solvable_type(algebra, ord).ok)
        throw std::invalid_argument("presentation is not of solvable type for this ordering");
}

// Left multiple n_m * g, scaled so its head is exactly coeff * m * LM(g).
Polynomial head_aligned_multiple(const AlgebraPresentation& algebra, const OrderingSpec& ord,
                                 const Monomial& m, const Polynomial& g, const Rational& coeff) {
    Polynomial prod = normal_form_product(
        algebra, Polynomial::term(g.signature(), m, Rational(1)), g);
    auto [lm, lc] = prod.leading_term(ord);
    return prod.scaled(coeff / lc);
}

}  // namespace

IdealSpec::IdealSpec(AlgebraPresentation alg, const std::vector<Polynomial>& gens)
    : algebra(std::move(alg)) {
    for (const auto& g : gens) {
        if (!same_signature(g.signature(), algebra.signature()))
            throw std::invalid_argument("generator over wrong ring");
        if (g.is_zero()) continue;
        if (std::find(generators.begin(), generators.end(), g) == generators.end())
            generators.push_back(g);
    }
}

DivisionResult divide(const Polynomial& a, const std::vector<Polynomial>& divisors,
                      const OrderingSpec& ord, const AlgebraPresentation& algebra) {
    require_admissible(ord);
    require_solvable(algebra, ord);
    if (!same_signature(a.signature(), algebra.signature()))
        throw std::invalid_argument("dividend over wrong ring");
    for (const auto& f : divisors) {
        if (f.is_zero()) throw std::invalid_argument("zero divisor entry");
        if (!same_signature(f.signature(), algebra.signature()))
            throw std::invalid_argument("divisor over wrong ring");
    }
    DivisionResult res{std::vector<Polynomial>(divisors.size(), Polynomial::zero(a.signature())),
                       Polynomial::zero(a.signature())};
    std::vector<Monomial> heads;
    heads.reserve(divisors.size());
    for (const auto& f : divisors) heads.push_back(f.leading_monomial(ord));

    Polynomial h = a;
    while (!h.is_zero()) {
        auto [lm, lc] = h.leading_term(ord);
        size_t k = 0;
        for (; k < divisors.size(); ++k) {
            if (heads[k].divides(lm)) break;
        }
        if (k == divisors.size()) {
            Polynomial t = Polynomial::term(a.signature(), lm, lc);
            res.remainder = res.remainder + t;
            h = h - t;
        } else {
            Monomial u = lm / heads[k];
            Polynomial prod = normal_form_product(
                algebra, Polynomial::term(a.signature(), u, Rational(1)), divisors[k]);
            Rational qc = lc / prod.leading_term(ord).second;
            // prod's head is u * heads[k] == lm, so the head cancels.
            h = h - prod.scaled(qc);
            res.quotients[k] = res.quotients[k] + Polynomial::term(a.signature(), u, qc);
        }
    }
    return res;
}

namespace {

struct PairKey {
    int lcm_degree;
    size_t i, j;
    bool operator<(const PairKey& o) const {
        if (lcm_degree != o.lcm_degree) return lcm_degree < o.lcm_degree;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

Polynomial s_polynomial(const AlgebraPresentation& algebra, const OrderingSpec& ord,
                        const Polynomial& f, const Polynomial& g) {
    Monomial lf = f.leading_monomial(ord);
    Monomial lg = g.leading_monomial(ord);
    Monomial l = lcm(lf, lg);
    Polynomial a = head_aligned_multiple(algebra, ord, l / lf, f, Rational(1));
    Polynomial b = head_aligned_multiple(algebra, ord, l / lg, g, Rational(1));
    return a - b;
}

}  // namespace

GroebnerBasis buchberger(const IdealSpec& ideal, const OrderingSpec& ord) {
    require_admissible(ord);
    require_solvable(ideal.algebra, ord);
    GroebnerBasis out{{}, ord, ideal.algebra, false};
    if (ideal.generators.empty()) return out;

    std::vector<Polynomial>& basis = out.elements;
    for (const auto& g : ideal.generators) {
        Polynomial m = g.monic(ord);
        if (std::find(basis.begin(), basis.end(), m) == basis.end()) basis.push_back(m);
    }

    std::set<PairKey> queue;
    auto push_pairs = [&](size_t upto) {
        for (size_t i = 0; i < upto; ++i) {
            Monomial l = lcm(basis[i].leading_monomial(ord), basis[upto].leading_monomial(ord));
            queue.insert(PairKey{l.degree(), i, upto});
        }
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

    long steps = 0;
    while (!queue.empty()) {
        PairKey key = *queue.begin();
        queue.erase(queue.begin());
        if (++steps > kMaxPairSteps) {
            std::ostringstream msg;
            msg << "completion budget exceeded after " << steps << " pairs (basis size "
                << basis.size() << ")";
            throw std::runtime_error(msg.str());
        }
        const Polynomial& f = basis[key.i];
        const Polynomial& g = basis[key.j];
        if (ideal.algebra.is_commutative()) {
            Monomial lf = f.leading_monomial(ord);
            Monomial lg = g.leading_monomial(ord);
            if (lcm(lf, lg) == lf * lg) continue;  // coprime heads
        }
        Polynomial s = s_polynomial(ideal.algebra, ord, f, g);
        if (s.is_zero()) continue;
        Polynomial r = divide(s, basis, ord, ideal.algebra).remainder;
        if (r.is_zero()) continue;
        basis.push_back(r.monic(ord));
        if (basis.size() > kMaxBasisSize)
            throw std::runtime_error("completion budget exceeded: basis grew past limit");
        push_pairs(basis.size() - 1);
    }
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& x, const Polynomial& y) {
        return ord.compare(x.leading_monomial(ord), y.leading_monomial(ord)) == Cmp::GT;
    });
    return out;
}

GroebnerBasis reduce_gb(const GroebnerBasis& basis) {
    GroebnerBasis out = basis;
    out.reduced = true;
    auto& els = out.elements;
    if (els.empty()) return out;
    const OrderingSpec& ord = out.ordering;

    // Drop elements whose head is generated by the other heads. Scanning
    // largest head first makes the survivor set deterministic when heads
    // repeat.
    std::sort(els.begin(), els.end(), [&](const Polynomial& x, const Polynomial& y) {
        return ord.compare(x.leading_monomial(ord), y.leading_monomial(ord)) == Cmp::GT;
    });
    for (size_t k = 0; k < els.size();) {
        Monomial head = els[k].leading_monomial(ord);
        bool drop = false;
        for (size_t i = 0; i < els.size(); ++i) {
            if (i == k) continue;
            if (els[i].leading_monomial(ord).divides(head)) { drop = true; break; }
        }
        if (drop) {
            els.erase(els.begin() + static_cast<std::ptrdiff_t>(k));
        } else {
            ++k;
        }
    }

    // Tail reduction against the fixed surviving head set.
    for (size_t k = 0; k < els.size(); ++k) {
        std::vector<Polynomial> rest;
        rest.reserve(els.size() - 1);
        for (size_t i = 0; i < els.size(); ++i) {
            if (i != k) rest.push_back(els[i]);
        }
        if (rest.empty()) break;
        els[k] = divide(els[k], rest, ord, out.algebra).remainder;
    }
    for (auto& g : els) g = g.monic(ord);
    std::sort(els.begin(), els.end(), [&](const Polynomial& x, const Polynomial& y) {
        return ord.compare(x.leading_monomial(ord), y.leading_monomial(ord)) == Cmp::GT;
    });
    return out;
}

MonomialIdeal leading_ideal(const IdealSpec& ideal, const OrderingSpec& ord) {
    GroebnerBasis g = reduce_gb(buchberger(ideal, ord));
    std::vector<Monomial> heads;
    heads.reserve(g.elements.size());
    for (const auto& e : g.elements) heads.push_back(e.leading_monomial(ord));
    return MonomialIdeal::from_generators(ideal.algebra.signature(), heads);
}

namespace {

using SparseRow = std::map<Monomial, Rational, CanonicalLess>;

Monomial row_head(const SparseRow& row, const OrderingSpec& ord) {
    auto best = row.begin();
    for (auto it = std::next(row.begin()); it != row.end(); ++it) {
        if (ord.compare(best->first, it->first) == Cmp::LT) best = it;
    }
    return best->first;
}

// Spanning rows of the ideal's degree-<= s part: left multiples of a
// degree-compatible reduced basis. Using such a basis (rather than the raw
// generators) is what makes the span exact; combinations of the input
// generators can cancel down into low degree.
std::vector<SparseRow> slice_rows(const IdealSpec& ideal, int s) {
    std::vector<SparseRow> rows;
    if (ideal.generators.empty()) return rows;
    OrderingSpec dco(MatrixOrdering::grlex(ideal.algebra.signature()->t));
    GroebnerBasis g = reduce_gb(buchberger(ideal, dco));
    for (const auto& e : g.elements) {
        int d = e.degree();
        if (d > s) continue;
        for (const auto& m : monomials_up_to(ideal.algebra.signature()->t, s - d)) {
            Polynomial prod = normal_form_product(
                ideal.algebra, Polynomial::term(e.signature(), m, Rational(1)), e);
            SparseRow row;
            for (const auto& [mon, c] : prod.terms()) row.emplace(mon, c);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

// Pivot monomials of the row space under ord (columns scanned descending).
std::vector<Monomial> triangularize(std::vector<SparseRow> rows, const OrderingSpec& ord) {
    std::map<std::vector<int>, SparseRow> pivots;  // head exponents -> normalized row
    for (auto& row : rows) {
        while (!row.empty()) {
            Monomial head = row_head(row, ord);
            auto it = pivots.find(head.exponents());
            if (it == pivots.end()) {
                Rational lc = row.at(head);
                for (auto& [m, c] : row) c /= lc;
                pivots.emplace(head.exponents(), std::move(row));
                break;
            }
            Rational factor = row.at(head);
            for (const auto& [m, c] : it->second) {
                auto [slot, inserted] = row.emplace(m, -factor * c);
                if (!inserted) {
                    slot->second -= factor * c;
                    if (slot->second.is_zero()) row.erase(slot);
                }
            }
        }
    }
    std::vector<Monomial> heads;
    heads.reserve(pivots.size());
    for (const auto& [e, row] : pivots) heads.emplace_back(e);
    std::sort(heads.begin(), heads.end(), CanonicalLess{});
    return heads;
}

}  // namespace

std::vector<Monomial> slice_leading_monomials(const IdealSpec& ideal, const OrderingSpec& ord,
                                              int s) {
    if (!ideal.algebra.is_commutative())
        throw std::invalid_argument("degree slices need a commutative algebra");
    if (!classify(ord).degree)
        throw std::invalid_argument("degree slices need a degree ordering");
    if (s < 0) throw std::invalid_argument("negative degree bound");
    return triangularize(slice_rows(ideal, s), ord);
}

MacaulayReport macaulay_check(const IdealSpec& ideal, const OrderingSpec& ord, int cap) {
    require_admissible(ord);
    require_solvable(ideal.algebra, ord);
    if (ideal.algebra.kind() == AlgebraKind::Solvable)
        throw std::invalid_argument("basis check supports commutative and Weyl kinds");
    const Signature& sig = ideal.algebra.signature();

    GroebnerBasis rgb = reduce_gb(buchberger(ideal, ord));
    std::vector<Monomial> heads;
    for (const auto& e : rgb.elements) heads.push_back(e.leading_monomial(ord));
    MonomialIdeal head_ideal = MonomialIdeal::from_generators(sig, heads);

    MacaulayReport rep;
    rep.basis = standard_monomials_up_to(head_ideal, cap);

    for (const auto& m : monomials_up_to(sig->t, cap)) {
        Polynomial pm = Polynomial::term(sig, m, Rational(1));
        Polynomial r = rgb.elements.empty()
                           ? pm
                           : divide(pm, rgb.elements, ord, ideal.algebra).remainder;
        for (const auto& n : r.support()) {
            if (head_ideal.contains(n)) {
                rep.pass = false;
                rep.failures.push_back("remainder of " + to_string(m, *sig) +
                                       " leaves the standard span at " + to_string(n, *sig));
            }
        }
        if (!head_ideal.contains(m) && r != pm) {
            rep.pass = false;
            rep.failures.push_back("standard monomial " + to_string(m, *sig) +
                                   " does not reduce to itself");
        }
    }

    if (classify(ord).degree) {
        std::vector<Monomial> basis_sorted = rep.basis;
        for (int s = 0; s <= cap; ++s) {
            auto pivots = triangularize(slice_rows(ideal, s), ord);
            long rank = static_cast<long>(pivots.size());
            long standard = static_cast<long>(
                std::count_if(basis_sorted.begin(), basis_sorted.end(),
                              [&](const Monomial& m) { return m.degree() <= s; }));
            Integer all = binomial(s + sig->t, sig->t);
            if (Integer(standard) + Integer(rank) != all) {
                rep.pass = false;
                rep.failures.push_back("dimension count fails at degree " + std::to_string(s));
            }
        }
    }
    return rep;
}

std::string to_string(const GroebnerBasis& basis) {
    std::string s = "{";
    for (size_t i = 0; i < basis.elements.size(); ++i) {
        if (i) s += ", ";
        s += to_string(basis.elements[i]);
    }
    return s + "}";
}

}  // namespace ordfan
