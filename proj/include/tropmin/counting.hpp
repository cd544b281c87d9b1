#pragma once

#include "tropmin/planar.hpp"

#include <optional>

namespace tropmin {

/// One inclusion-exclusion correction: the subset S of curve indices,
/// the Euler characteristic of the intersection of their curves, and the
/// signed contribution (-1)^(|S|+d) * chi.
struct CorrectionTerm {
    std::vector<size_t> subset;
    long long chi = 0;
    long long term = 0;
};

struct CountReport {
    long long flen = 0;
    long long mlen_formula = 0;
    std::optional<long long> mlen_oracle;
    std::vector<CorrectionTerm> terms;
    bool generic = false;
    bool tight = false;
};

/// Region count of the arrangement of the curves of gs (d = 2) as
/// flen + sum over subsets of signed Euler characteristics. With
/// `with_oracle` the clipped-arrangement face count is run as a
/// cross-check and recorded in mlen_oracle.
CountReport region_count_formula(const std::vector<Signomial>& gs, bool with_oracle = false);

/// flen + sum_{k=2..d} C(m, k).
long long lower_bound_rhs(size_t m, size_t d, long long flen);

struct BoundReport {
    CountReport count;
    long long rhs = 0;
    bool holds = false;
    bool tight = false;
    bool generic = false;
    /// per unordered pair: intersection classified as "point", "points",
    /// "affine-line", "mixed" or "empty"
    std::vector<std::pair<std::vector<size_t>, std::string>> pair_kinds;
};

/// Compare the region count against the generic lower bound
/// flen + C(m, 2); tightness and a genericity verdict are reported, the
/// inequality itself is evaluated unconditionally.
BoundReport check_lower_bound(const std::vector<Signomial>& gs, bool with_oracle = false);

/// sum |P_i| + 2 * sum_{k=0..d-1} C(m-1, k) - 2m.
long long minkowski_lower_bound_rhs(const std::vector<size_t>& vertex_counts, size_t d);

struct MinkowskiReport {
    size_t sum_vertices = 0;
    long long rhs = 0;
    bool holds = false;
    bool degenerate = false;          // sum not full-dimensional
    std::optional<long long> zonotope_rhs;  // when all summands have dim >= 1
    bool zonotope_holds = false;
};

MinkowskiReport check_minkowski_bound(const std::vector<Polytope>& polys);

/// mlen(num) + mlen(den) + chi(V(num) cap V(den)) for d = 2.
long long linear_region_bound(const RationalRep& r);

long long binomial(size_t n, size_t k);

}  // namespace tropmin
