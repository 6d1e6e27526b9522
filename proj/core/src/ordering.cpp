#include "ordfan/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ordfan/rational.hpp"

namespace ordfan {

namespace {

// Incremental rank tracker over the rationals (row echelon form).
class RowSpace {
public:
    explicit RowSpace(int t) : t_(t) {}

    int rank() const { return static_cast<int>(basis_.size()); }

    // Returns true (and absorbs the row) when it enlarges the span.
    bool add(const std::vector<long>& row) {
        std::vector<Rational> v(row.begin(), row.end());
        for (const auto& b : basis_) {
            size_t p = pivot_of(b);
            if (!v[p].is_zero()) {
                Rational f = v[p] / b[p];
                for (size_t i = p; i < v.size(); ++i) v[i] -= f * b[i];
            }
        }
        size_t p = 0;
        while (p < v.size() && v[p].is_zero()) ++p;
        if (p == v.size()) return false;
        basis_.push_back(std::move(v));
        std::sort(basis_.begin(), basis_.end(),
                  [](const auto& a, const auto& b) { return pivot_of(a) < pivot_of(b); });
        return true;
    }

private:
    static size_t pivot_of(const std::vector<Rational>& v) {
        size_t p = 0;
        while (p < v.size() && v[p].is_zero()) ++p;
        return p;
    }

    int t_;
    std::vector<std::vector<Rational>> basis_;
};

long dot(const std::vector<long>& w, const Monomial& m) {
    long s = 0;
    for (int i = 0; i < m.num_vars(); ++i) s += w[static_cast<size_t>(i)] * m.exponent(i);
    return s;
}

bool lex_positive(const std::vector<long>& col) {
    for (long v : col) {
        if (v != 0) return v > 0;
    }
    return false;
}

}  // namespace

MatrixOrdering MatrixOrdering::from_rows(int t, std::vector<std::vector<long>> rows) {
    if (t < 1) throw std::invalid_argument("matrix ordering needs t >= 1");
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != t) throw std::invalid_argument("row length != t");
    }
    RowSpace span(t);
    for (const auto& r : rows) span.add(r);
    for (int i = 0; i < t && span.rank() < t; ++i) {
        std::vector<long> e(static_cast<size_t>(t), 0);
        e[static_cast<size_t>(i)] = 1;
        if (span.add(e)) rows.push_back(std::move(e));
    }
    if (span.rank() < t) throw std::invalid_argument("matrix rows do not reach rank t");
    return MatrixOrdering(t, std::move(rows));
}

MatrixOrdering MatrixOrdering::lex(int t) {
    std::vector<std::vector<long>> rows;
    for (int i = 0; i < t; ++i) {
        std::vector<long> e(static_cast<size_t>(t), 0);
        e[static_cast<size_t>(i)] = 1;
        rows.push_back(std::move(e));
    }
    return MatrixOrdering(t, std::move(rows));
}

MatrixOrdering MatrixOrdering::grlex(int t) {
    std::vector<std::vector<long>> rows;
    rows.emplace_back(static_cast<size_t>(t), 1);
    for (int i = 0; i + 1 < t; ++i) {
        std::vector<long> e(static_cast<size_t>(t), 0);
        e[static_cast<size_t>(i)] = 1;
        rows.push_back(std::move(e));
    }
    return from_rows(t, std::move(rows));
}

MatrixOrdering MatrixOrdering::grevlex(int t) {
    std::vector<std::vector<long>> rows;
    rows.emplace_back(static_cast<size_t>(t), 1);
    for (int i = t - 1; i >= 1; --i) {
        std::vector<long> e(static_cast<size_t>(t), 0);
        e[static_cast<size_t>(i)] = -1;
        rows.push_back(std::move(e));
    }
    return MatrixOrdering(t, std::move(rows));
}

MatrixOrdering MatrixOrdering::weighted(std::vector<long> w, const MatrixOrdering& tie) {
    int t = tie.t();
    if (static_cast<int>(w.size()) != t) throw std::invalid_argument("weight length != t");
    std::vector<std::vector<long>> rows;
    rows.push_back(std::move(w));
    for (const auto& r : tie.rows()) rows.push_back(r);
    return from_rows(t, std::move(rows));
}

Cmp MatrixOrdering::compare(const Monomial& a, const Monomial& b) const {
    if (a.num_vars() != t_ || b.num_vars() != t_)
        throw std::invalid_argument("monomial arity differs from the ordering");
    for (const auto& row : rows_) {
        long da = dot(row, a);
        long db = dot(row, b);
        if (da != db) return da < db ? Cmp::LT : Cmp::GT;
    }
    return Cmp::EQ;
}

bool MatrixOrdering::is_admissible() const {
    for (int j = 0; j < t_; ++j) {
        std::vector<long> col;
        col.reserve(rows_.size());
        for (const auto& r : rows_) col.push_back(r[static_cast<size_t>(j)]);
        if (!lex_positive(col)) return false;
    }
    return true;
}

bool MatrixOrdering::is_degree() const {
    // Rows that are rational combinations of earlier rows never influence a
    // comparison, so the test looks at the first effective row.
    RowSpace span(t_);
    for (const auto& r : rows_) {
        if (!span.add(r)) continue;
        bool zero = std::all_of(r.begin(), r.end(), [](long v) { return v == 0; });
        if (zero) continue;  // unreachable: a dependent zero row never enlarges the span
        long c = r[0];
        if (c <= 0) return false;
        return std::all_of(r.begin(), r.end(), [c](long v) { return v == c; });
    }
    return false;
}

GradedTableOrdering::GradedTableOrdering(int t, std::vector<std::vector<Monomial>> slices,
                                         MatrixOrdering fallback)
    : t_(t), slices_(std::move(slices)), fallback_(std::move(fallback)) {
    if (t < 1) throw std::invalid_argument("graded table needs t >= 1");
    if (fallback_.t() != t) throw std::invalid_argument("fallback arity mismatch");
    if (slices_.empty()) slices_.push_back({Monomial::one(t)});
    pos_.resize(slices_.size());
    for (size_t d = 0; d < slices_.size(); ++d) {
        auto expect = monomials_of_degree(t, static_cast<int>(d));
        if (slices_[d].size() != expect.size())
            throw std::invalid_argument("slice does not cover its degree");
        for (size_t i = 0; i < slices_[d].size(); ++i) {
            const Monomial& m = slices_[d][i];
            if (m.degree() != static_cast<int>(d))
                throw std::invalid_argument("monomial in wrong slice");
            if (!pos_[d].emplace(m.exponents(), static_cast<int>(i)).second)
                throw std::invalid_argument("repeated monomial in slice");
        }
    }
}

Cmp GradedTableOrdering::compare(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? Cmp::LT : Cmp::GT;
    if (da <= depth()) {
        int ia = pos_[static_cast<size_t>(da)].at(a.exponents());
        int ib = pos_[static_cast<size_t>(da)].at(b.exponents());
        if (ia == ib) return Cmp::EQ;
        return ia < ib ? Cmp::LT : Cmp::GT;
    }
    return fallback_.compare(a, b);
}

int OrderingSpec::t() const {
    return std::visit([](const auto& o) { return o.t(); }, v_);
}

Cmp OrderingSpec::compare(const Monomial& a, const Monomial& b) const {
    return std::visit([&](const auto& o) { return o.compare(a, b); }, v_);
}

std::string to_string(Tri v) {
    switch (v) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        default: return "unknown";
    }
}

OrderingClassification classify(const OrderingSpec& ord, int window) {
    if (window < 2) throw std::invalid_argument("classification window must be >= 2");
    OrderingClassification c;
    if (ord.is_matrix()) {
        const auto& m = ord.matrix();
        bool adm = m.is_admissible();
        c.compatible = Tri::Yes;
        c.founded_at_one = adm;
        c.degree = m.is_degree();
        c.admissible = adm ? Tri::Yes : Tri::No;
        c.well = c.admissible;
        return c;
    }
    const auto& g = ord.table();
    c.degree = true;
    c.founded_at_one = true;
    c.well = Tri::Yes;
    int bound = std::min(g.depth(), window);
    auto mons = monomials_up_to(g.t(), bound);
    c.compatible = Tri::Unknown;
    for (const auto& u : mons) {
        for (const auto& v : mons) {
            if (u == v) continue;
            if (ord.compare(u, v) == Cmp::GT) continue;  // only u <= v
            for (const auto& gmul : mons) {
                Monomial ug = u * gmul;
                Monomial vg = v * gmul;
                if (ug.degree() > bound || vg.degree() > bound) continue;
                if (ord.compare(ug, vg) == Cmp::GT) {
                    c.compatible = Tri::No;
                    c.witness = CompatibilityWitness{u, v, gmul};
                    c.admissible = Tri::No;
                    return c;
                }
            }
        }
    }
    c.admissible = Tri::Unknown;
    return c;
}

std::string MetricResult::str() const {
    switch (kind) {
        case Kind::Zero: return "0";
        case Kind::Exact: return "2^-" + std::to_string(r);
        default: return "<2^-" + std::to_string(r);
    }
}

MetricResult metric_distance(const OrderingSpec& a, const OrderingSpec& b, int cap) {
    if (a.t() != b.t()) throw std::invalid_argument("orderings over different rings");
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
    if (a == b) return {MetricResult::Kind::Zero, 0};
    int t = a.t();
    std::vector<Monomial> slice;  // S_i, grown one degree at a time
    // S_0 is empty and S_1 = {1}; agreement there is automatic.
    slice.push_back(Monomial::one(t));
    for (int i = 2; i <= cap; ++i) {
        auto fresh = monomials_of_degree(t, i - 1);
        slice.insert(slice.end(), fresh.begin(), fresh.end());
        // Check agreement on S_i; new disagreements always involve pairs
        // inside the enlarged slice.
        for (const auto& u : slice) {
            for (const auto& v : slice) {
                if (a.compare(u, v) != b.compare(u, v)) {
                    return {MetricResult::Kind::Exact, i - 1};
                }
            }
        }
    }
    return {MetricResult::Kind::BelowCap, cap};
}

GradedTableOrdering perturb_to_incompatible(const OrderingSpec& ord, int r) {
    int t = ord.t();
    if (t < 2) throw std::invalid_argument("needs at least two variables");
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    if (!classify(ord).degree) throw std::invalid_argument("input must be a degree ordering");

    int depth = r + 2;
    std::vector<std::vector<Monomial>> slices;
    slices.reserve(static_cast<size_t>(depth) + 1);
    for (int d = 0; d <= depth; ++d) {
        auto s = monomials_of_degree(t, d);
        std::sort(s.begin(), s.end(), [&](const Monomial& x, const Monomial& y) {
            return ord.compare(x, y) == Cmp::LT;
        });
        slices.push_back(std::move(s));
    }

    Monomial x1 = Monomial::variable(t, 0);
    Monomial x2 = Monomial::variable(t, 1);
    Monomial a = Monomial::variable(t, 0, r + 2);  // x1^(r+2)
    std::vector<int> e(static_cast<size_t>(t), 0);
    e[0] = r + 1;
    e[1] = 1;
    Monomial b(e);  // x1^(r+1)*x2

    auto& top = slices[static_cast<size_t>(depth)];
    auto ia = std::find(top.begin(), top.end(), a) - top.begin();
    auto ib = std::find(top.begin(), top.end(), b) - top.begin();
    auto at = std::min(ia, ib);
    top.erase(std::remove_if(top.begin(), top.end(),
                             [&](const Monomial& m) { return m == a || m == b; }),
              top.end());
    // Opposite of what compatibility with the degree-1 slice would force.
    bool x1_below_x2 = ord.compare(x1, x2) == Cmp::LT;
    std::vector<Monomial> pair = x1_below_x2 ? std::vector<Monomial>{b, a}
                                             : std::vector<Monomial>{a, b};
    top.insert(top.begin() + std::min<std::ptrdiff_t>(at, static_cast<std::ptrdiff_t>(top.size())),
               pair.begin(), pair.end());

    MatrixOrdering fallback = ord.is_matrix() ? ord.matrix() : ord.table().fallback();
    return GradedTableOrdering(t, std::move(slices), std::move(fallback));
}

namespace {

std::vector<std::vector<long>> permutation_rows(int t, const std::vector<int>& perm) {
    std::vector<std::vector<long>> rows;
    rows.reserve(perm.size());
    for (int p : perm) {
        std::vector<long> e(static_cast<size_t>(t), 0);
        e[static_cast<size_t>(p)] = 1;
        rows.push_back(std::move(e));
    }
    return rows;
}

void enumerate_first_rows(int t, int level, std::vector<long>& cur, size_t pos, bool has_level,
                          std::vector<std::vector<long>>& out) {
    if (pos == cur.size()) {
        if (has_level) out.push_back(cur);
        return;
    }
    for (long v = 0; v <= level; ++v) {
        cur[pos] = v;
        enumerate_first_rows(t, level, cur, pos + 1, has_level || v == level, out);
    }
}

}  // namespace

std::vector<MatrixOrdering> sample_matrix_orderings_at_level(int t, int level) {
    if (t < 1 || level < 1) throw std::invalid_argument("bad sampler arguments");
    std::vector<std::vector<long>> firsts;
    std::vector<long> cur(static_cast<size_t>(t), 0);
    enumerate_first_rows(t, level, cur, 0, false, firsts);
    std::vector<int> perm(static_cast<size_t>(t));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<MatrixOrdering> out;
    for (const auto& w : firsts) {
        std::vector<int> p = perm;
        do {
            std::vector<std::vector<long>> rows;
            rows.push_back(w);
            for (auto& r : permutation_rows(t, p)) rows.push_back(std::move(r));
            out.push_back(MatrixOrdering(t, std::move(rows)));
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return out;
}

std::vector<MatrixOrdering> sample_matrix_orderings(int t, int weight_bound) {
    if (weight_bound < 1) throw std::invalid_argument("weight bound must be >= 1");
    std::vector<MatrixOrdering> out;
    for (int level = 1; level <= weight_bound; ++level) {
        auto batch = sample_matrix_orderings_at_level(t, level);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

std::vector<MatrixOrdering> random_matrix_orderings(int t, long max_entry, int count,
                                                    std::uint64_t seed) {
    if (t < 1 || max_entry < 1 || count < 0) throw std::invalid_argument("bad sampler arguments");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> entry(0, max_entry);
    std::vector<int> perm(static_cast<size_t>(t));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<MatrixOrdering> out;
    out.reserve(static_cast<size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        std::vector<long> w(static_cast<size_t>(t));
        bool nonzero = false;
        for (auto& v : w) {
            v = entry(rng);
            nonzero = nonzero || v != 0;
        }
        if (!nonzero) continue;
        std::vector<int> p = perm;
        std::shuffle(p.begin(), p.end(), rng);
        std::vector<std::vector<long>> rows;
        rows.push_back(std::move(w));
        for (auto& r : permutation_rows(t, p)) rows.push_back(std::move(r));
        out.push_back(MatrixOrdering(t, std::move(rows)));
    }
    return out;
}

}  // namespace ordfan
