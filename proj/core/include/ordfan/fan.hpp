// Sweeps of ordering families against a fixed ideal: the distinct leading
// monomial ideals found over admissible matrix orderings or over explicit
// graded tables, minimality filtering, union-of-bases construction and its
// verification on fresh orderings.
#ifndef ORDFAN_FAN_HPP
#define ORDFAN_FAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordfan/groebner.hpp"

namespace ordfan {

inline constexpr std::uint64_t kDefaultSeed = 0x0fda5eed;

struct FanEntry {
    OrderingSpec witness;
    MonomialIdeal ideal;
    std::optional<GroebnerBasis> gb;  // reduced basis for the witness, when available
};

struct FanConfig {
    int weight_bound = 0;
    int stability_rounds = 0;
    std::uint64_t seed = kDefaultSeed;
    int depth = 0;  // graded-table sweeps only
};

struct FanResult {
    std::vector<FanEntry> entries;  // pairwise distinct ideals
    FanConfig config;
    // True when the final weight level contributed no new ideal (or the
    // graded-table sweep covered its whole depth). An empirical flag, not a
    // completeness certificate.
    bool exhausted = false;
};

// Sweeps the deterministic admissible matrix orderings up to weight_bound,
// plus `rounds` seeded random ones with entries up to 4*weight_bound, and
// dedupes the leading ideals. Each entry keeps its reduced basis.
FanResult enumerate_leading_ideals_admissible(const IdealSpec& ideal, int weight_bound,
                                              int rounds = 0,
                                              std::uint64_t seed = kDefaultSeed);

// Entries whose ideal is minimal under inclusion among all entries.
FanResult minimal_leading_ideals(const FanResult& fan);

// Exhaustive sweep over every graded table of the given depth (grlex ties
// beyond it): for each table the ideal spanned by the heads of the
// degree-<= depth part. Guarded against permutation blow-up.
FanResult enumerate_leading_ideals_degree(const IdealSpec& ideal, int depth);

// Union of the reduced bases of all entries, with each element normalized
// monic under the canonical monomial order so that the same ideal element
// found in different cones collapses to one representative.
std::vector<Polynomial> universal_gb(const IdealSpec& ideal, const FanResult& fan);

struct VerifyFailure {
    OrderingSpec ordering;
    std::string reason;
};

struct VerifyReport {
    bool pass = true;
    size_t checked = 0;
    std::vector<VerifyFailure> failures;
};

// For every ordering: the heads of U must generate the same monomial ideal
// as the ideal's own leading ideal, and every element of U must reduce to
// zero against a basis of the ideal.
VerifyReport verify_universal(const std::vector<Polynomial>& universal, const IdealSpec& ideal,
                              const std::vector<OrderingSpec>& orderings);

// Ceiling of 2*((d^2+2d)/2)^(2^(t-1)), evaluated exactly.
Integer degree_bound_quadric(int d, int t);

std::string to_report(const FanResult& fan);

}  // namespace ordfan

#endif
