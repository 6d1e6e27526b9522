// Total orderings on the monomial basis: integer-matrix orderings, explicit
// graded tables with per-degree slices, classification into the ordering
// classes (1-founded / compatible / degree / admissible / well), the
// slice-filtration metric between orderings, the incompatible perturbation of
// a degree ordering, and deterministic/random samplers of admissible matrix
// orderings.
#ifndef ORDFAN_ORDERING_HPP
#define ORDFAN_ORDERING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ordfan/monomial.hpp"

namespace ordfan {

enum class Cmp { LT, EQ, GT };

// Ordering by an integer matrix: m1 <= m2 iff Gamma*e(m1) <=_lex Gamma*e(m2).
// The row list always has full column rank t, so distinct monomials never
// compare equal.
class MatrixOrdering {
public:
    // Uses the rows as given; pads with identity rows (skipping dependent
    // ones) until the rank reaches t. Throws if t rows never suffice.
    static MatrixOrdering from_rows(int t, std::vector<std::vector<long>> rows);

    static MatrixOrdering lex(int t);
    static MatrixOrdering grlex(int t);
    static MatrixOrdering grevlex(int t);
    // First row w, then the rows of tie. w must have length t.
    static MatrixOrdering weighted(std::vector<long> w, const MatrixOrdering& tie);

    int t() const { return t_; }
    const std::vector<std::vector<long>>& rows() const { return rows_; }

    Cmp compare(const Monomial& a, const Monomial& b) const;

    // Exact class tests.
    bool is_admissible() const;  // every column lex-positive
    bool is_degree() const;      // first effective row a positive multiple of (1,..,1)

    bool operator==(const MatrixOrdering& o) const { return t_ == o.t_ && rows_ == o.rows_; }

private:
    MatrixOrdering(int t, std::vector<std::vector<long>> rows)
        : t_(t), rows_(std::move(rows)) {}

    int t_ = 0;
    std::vector<std::vector<long>> rows_;

    friend std::vector<MatrixOrdering> sample_matrix_orderings_at_level(int, int);
    friend std::vector<MatrixOrdering> random_matrix_orderings(int, long, int, std::uint64_t);
};

// Degree ordering given by explicit per-degree slices up to a depth D and a
// matrix ordering breaking ties inside deeper degrees. Lower degree always
// precedes higher degree.
class GradedTableOrdering {
public:
    // slices[d] lists the monomials of degree d in ascending order and must
    // be a permutation of all of them; slices[0] is {1}.
    GradedTableOrdering(int t, std::vector<std::vector<Monomial>> slices, MatrixOrdering fallback);

    int t() const { return t_; }
    int depth() const { return static_cast<int>(slices_.size()) - 1; }
    const std::vector<std::vector<Monomial>>& slices() const { return slices_; }
    const MatrixOrdering& fallback() const { return fallback_; }

    Cmp compare(const Monomial& a, const Monomial& b) const;

    bool operator==(const GradedTableOrdering& o) const {
        return t_ == o.t_ && slices_ == o.slices_ && fallback_ == o.fallback_;
    }

private:
    int t_;
    std::vector<std::vector<Monomial>> slices_;
    std::vector<std::map<std::vector<int>, int>> pos_;  // slice -> exponent -> rank
    MatrixOrdering fallback_;
};

class OrderingSpec {
public:
    OrderingSpec(MatrixOrdering m) : v_(std::move(m)) {}           // NOLINT
    OrderingSpec(GradedTableOrdering g) : v_(std::move(g)) {}      // NOLINT

    int t() const;
    Cmp compare(const Monomial& a, const Monomial& b) const;

    bool is_matrix() const { return std::holds_alternative<MatrixOrdering>(v_); }
    bool is_table() const { return std::holds_alternative<GradedTableOrdering>(v_); }
    const MatrixOrdering& matrix() const { return std::get<MatrixOrdering>(v_); }
    const GradedTableOrdering& table() const { return std::get<GradedTableOrdering>(v_); }

    // Structural identity of the representations, not extensional equality
    // of the orderings (which is undecidable in general).
    bool operator==(const OrderingSpec& o) const { return v_ == o.v_; }

private:
    std::variant<MatrixOrdering, GradedTableOrdering> v_;
};

enum class Tri { Yes, No, Unknown };

std::string to_string(Tri v);

// u <= v held but u*g > v*g.
struct CompatibilityWitness {
    Monomial u, v, g;
};

struct OrderingClassification {
    bool founded_at_one = false;
    Tri compatible = Tri::Unknown;
    bool degree = false;
    Tri admissible = Tri::Unknown;
    Tri well = Tri::Unknown;
    std::optional<CompatibilityWitness> witness;  // present when compatible == No
};

// Matrix orderings classify exactly. Graded tables are exact for the
// founded/degree/well flags; compatibility is searched over all monomial
// triples whose products stay within degree min(depth, window) and reported
// Unknown when no violation is found there.
OrderingClassification classify(const OrderingSpec& ord, int window = 4);

// Distance between two orderings under the filtration by the finite slices
// S_i = {m : deg(m) < i}. The value is 2^-r with r the deepest slice on
// which the orderings agree as relations; agreement through S_cap is
// reported as the capped outcome, and 0 only for structurally identical
// specs.
struct MetricResult {
    enum class Kind { Zero, Exact, BelowCap };
    Kind kind;
    int r = 0;  // Exact: distance 2^-r. BelowCap: r == cap.

    bool less_than(int rr) const {  // is distance < 2^-rr?
        if (kind == Kind::Zero) return true;
        return r > rr;
    }
    std::string str() const;
};

MetricResult metric_distance(const OrderingSpec& a, const OrderingSpec& b, int cap);

// From a degree ordering, builds a nearby degree ordering that is certainly
// not compatible: all slices through degree r+1 are kept, and inside degree
// r+2 the pair x1^(r+2), x1^(r+1)*x2 is made adjacent and put in the order
// opposite to what compatibility with the degree-1 comparison would force.
GradedTableOrdering perturb_to_incompatible(const OrderingSpec& ord, int r);

// Deterministic enumeration of admissible matrix orderings: every first row
// with entries in 0..weight_bound (not all zero), each completed by the rows
// of every variable permutation matrix. Level k holds those first rows whose
// maximum entry equals k.
std::vector<MatrixOrdering> sample_matrix_orderings(int t, int weight_bound);
std::vector<MatrixOrdering> sample_matrix_orderings_at_level(int t, int level);

// Seeded random admissible matrix orderings (random nonzero first row with
// entries in 0..max_entry, random permutation tie-break).
std::vector<MatrixOrdering> random_matrix_orderings(int t, long max_entry, int count,
                                                    std::uint64_t seed);

}  // namespace ordfan

#endif
