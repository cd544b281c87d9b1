#pragma once

#include "tropmin/planar.hpp"

namespace tropmin {

struct NotCompletelyUnbalanced : std::runtime_error {
    NotCompletelyUnbalanced() : std::runtime_error("fan is not completely unbalanced") {}
};
struct Reducible : std::runtime_error {
    Reducible() : std::runtime_error("signed fan is reducible") {}
};
struct NotAFan : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotGeneric : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RayLimitExceeded : std::runtime_error {
    RayLimitExceeded() : std::runtime_error("too many rays for subset enumeration") {}
};

/// Piecewise-linear function of one variable: breakpoints with positive
/// slope-change magnitudes, plus an anchor value and the slope left of
/// all breakpoints.
struct Breakpoint {
    Rational x;
    Rational change;  // > 0
    bool convex;      // convex kink (+change) or concave kink (-change)
};

struct PL1D {
    std::vector<Breakpoint> breakpoints;  // strictly increasing locations
    Rational anchor_x;
    Rational anchor_value;
    Rational slope_left;
};

Rational pl1d_evaluate(const PL1D& f, const Rational& x);

/// Minimal representation of a one-variable piecewise-linear function:
/// one two-monomial factor (x + x_i)^(a_i) per convex breakpoint in the
/// numerator, per concave breakpoint in the denominator, and a linear
/// correction fixed by the anchor. Minimal and unique up to a linear
/// shift.
RationalRep minimal_representation_1d(const PL1D& f);

/// No nonempty subset of the ray vectors (at full weights) sums to zero.
bool is_completely_unbalanced(const WeightedFan& f);

struct BalancingResult {
    std::vector<WeightedFan> fans;            // one balanced fan per block
    std::vector<std::vector<size_t>> partition;  // blocks of input ray indices
    std::vector<Vec2> added;                  // added ray vector per block
    size_t mlen = 0;                          // of the union of the fans
    size_t flen = 0;
    bool degenerate = false;  // an added ray was parallel to a block ray
};

/// Unique mlen-minimal balancing: add the single ray with vector
/// -sum(v_i). The result is balanced with m+1 rays.
BalancingResult minimal_balancing_fan_mlen(const WeightedFan& f);

/// One flen-minimal balancing per set partition of the rays (the Bell
/// number of m results): each block balanced by its own added ray, every
/// result of factorization length m+1. Lexicographic partition order.
std::vector<BalancingResult> enumerate_flen_minimal_balancings(const WeightedFan& f);

/// Signed fan with cancellation applied: no direction appears in both
/// parts.
struct SignedFan {
    Vec2 base;
    WeightedFan pos;
    WeightedFan neg;

    SignedFan() = default;
    SignedFan(Vec2 base_, std::vector<FanRay> pos_rays, std::vector<FanRay> neg_rays);
};

/// Views a signed complex whose parts are fans at a common base point as
/// a SignedFan; throws NotAFan otherwise.
SignedFan signed_fan_of(const SignedComplex& c);

/// No proper nonempty subset of the signed ray multiset sums to zero
/// (full-weight granularity; a sufficient condition for irreducibility).
bool is_irreducible_fan(const SignedFan& s);

/// Recover a balanced fan as the tropical curve of a signomial: rotate
/// each weighted ray vector by 90 degrees to get the polygon edge
/// vectors, chain them in angular order into a convex polygon anchored
/// at the origin, and pick coefficients so that all monomials agree at
/// the base point.
Signomial fan_dual_signomial(const WeightedFan& f);

/// Minimal representation of a piecewise-linear function whose corner
/// locus is the given irreducible fan: balance the positive and negative
/// parts (the same added ray balances both) and dualize each to a
/// signomial. Lengths are (m1+1, m2+1) for unbalanced parts.
RationalRep minimal_representation_fan(const SignedFan& s);

/// Full line of a canonical arrangement with its dominating weight.
struct ArrangementLine {
    Vec2 point;
    Vec2 dir;  // line-canonical primitive
    EdgeVec w;
};

struct Arrangement {
    std::vector<ArrangementLine> lines;

    size_t flen() const { return lines.size() + 1; }
};

/// Affine spans of all maximal cells, one full line per distinct span,
/// each weighted by the maximum cell weight it has to cover.
Arrangement canonical_arrangement(const PlanarComplex& x);

PlanarComplex complex_of_arrangement(const Arrangement& a);

struct FlenBoundReport {
    size_t arrangement_flen = 0;
    size_t balancing_flen = 0;
    bool holds = false;  // flen(A_X) <= 3 flen(V)
};

/// Checks flen(A_X) <= 3 flen(V) for a certified minimal balancing V
/// given as a list of balanced complexes (factors).
FlenBoundReport verify_flen_bound(const PlanarComplex& x,
                                  const std::vector<PlanarComplex>& balancing);

struct UnionBalancing {
    std::vector<WeightedFan> fans;  // per-fan mlen-minimal balancings
    size_t flen = 0;                // sum of ray counts + 1
};

/// Per-fan minimal balancings of completely unbalanced fans in general
/// position balance the union minimally w.r.t. flen.
UnionBalancing minimal_balancing_union(const std::vector<WeightedFan>& fans);

/// The triangle complex balanced both by an irreducible 5-monomial
/// signomial curve and a 3-factor binomial product, witnessing that the
/// two length notions pick different minimal balancings.
struct BalancingWitness {
    PlanarComplex x;        // shared middle triangle, min weights
    Signomial y1;           // the irreducible signomial
    Factorization y2;       // the three binomial factors
    PlanarComplex y1_curve;
    PlanarComplex y2_curve;
    size_t mlen_y1 = 0, mlen_y2 = 0;
    size_t flen_y1 = 0, flen_y2 = 0;
    size_t paper_mlen_y2 = 6;  // stated value; the oracle recomputes it
    bool y1_balances = false, y2_balances = false;
};

BalancingWitness balancing_not_unique_witness();

/// All set partitions of {0..m-1} in restricted-growth-string order.
std::vector<std::vector<std::vector<size_t>>> set_partitions(size_t m);

}  // namespace tropmin
