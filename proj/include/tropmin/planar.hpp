#pragma once

#include "tropmin/signomial.hpp"
#include "tropmin/vec.hpp"

#include <vector>

namespace tropmin {

/// Weighted direction payload of a 1-cell. The actual weighted vector is
/// lambda * prim, with prim the sign-normalized primitive vector of the
/// cell's line; weights are never stored as scalar lengths so the
/// balancing check stays a rational vector sum.
struct EdgeVec {
    Vec2 prim;        // primitive, first nonzero coordinate positive
    Rational lambda;  // > 0 inside a complex

    Vec2 vec() const { return prim * lambda; }
    bool operator==(const EdgeVec& o) const = default;
};

struct PCEdge {
    enum Kind { Segment, Ray } kind;
    size_t a;     // tail vertex
    size_t b;     // head vertex (segments)
    Vec2 dir;     // oriented primitive direction (rays)
    EdgeVec w;

    bool operator==(const PCEdge& o) const
    {
        if (kind != o.kind || a != o.a || !(w == o.w))
            return false;
        return kind == Segment ? b == o.b : dir == o.dir;
    }
};

/// Embedded weighted polyhedral complex of dimension <= 1 in the plane,
/// stored in a canonical form: edges meet only at shared vertices,
/// coincident cells are merged, collinear equal-weight chains are
/// dissolved. Intersection complexes may carry isolated vertices.
struct PlanarComplex {
    std::vector<Vec2> vertices;
    std::vector<PCEdge> edges;

    bool empty() const { return vertices.empty(); }
    bool operator==(const PlanarComplex& o) const = default;
};

/// Corner locus split into its strictly convex and strictly concave
/// parts; the two supports share no 1-cell.
struct SignedComplex {
    PlanarComplex pos;
    PlanarComplex neg;

    bool operator==(const SignedComplex& o) const = default;
};

struct FanRay {
    Vec2 dir;         // oriented primitive
    Rational lambda;  // > 0

    Vec2 vec() const { return dir * lambda; }
    bool operator==(const FanRay& o) const = default;
};

/// One-dimensional weighted fan: rays from a common base point, parallel
/// (same-direction) rays merged by adding their weighted vectors.
struct WeightedFan {
    Vec2 base;
    std::vector<FanRay> rays;

    WeightedFan() = default;
    WeightedFan(Vec2 base_, std::vector<FanRay> rays_);
    bool operator==(const WeightedFan& o) const = default;
};

/// Input soup for the arrangement builder.
struct Piece {
    bool is_ray = false;
    Vec2 a;
    Vec2 b;          // segments
    Vec2 dir;        // rays, oriented primitive
    Vec2 wprim;      // line-canonical primitive of the cell direction
    Rational wlam;   // signed during assembly

    static Piece segment(Vec2 p, Vec2 q, Rational lambda);
    static Piece ray(Vec2 base, Vec2 direction, Rational lambda);
};

/// Common refinement of a piece soup into a canonical complex. Weighted
/// vectors of coincident collinear cells are added; zero-weight cells are
/// dropped. All surviving weights must be positive.
PlanarComplex assemble(std::vector<Piece> pieces,
                       const std::vector<Vec2>& isolated_points = {},
                       bool keep_isolated = false);

/// Same refinement, but cells are routed by the sign of their net weight.
SignedComplex assemble_signed(std::vector<Piece> pieces);

std::vector<Piece> pieces_of(const PlanarComplex& x, int sign = 1);
std::vector<Piece> line_pieces(const Vec2& point, const Vec2& direction, Rational lambda);

/// Tropical curve of a 2-variable signomial, dual to its regular
/// subdivision: a curve vertex per 2-cell, an edge per interior 1-cell, a
/// ray per boundary 1-cell. Weighted vectors are the 90-degree rotations
/// of the dual exponent differences.
PlanarComplex tropical_curve(const Signomial& s);

PlanarComplex overlay(const PlanarComplex& a, const PlanarComplex& b);

/// V(num) - V(den) with cancellation applied.
SignedComplex corner_locus(const RationalRep& r);

/// Alternating cell count: #vertices - #edges (rays count as one cell).
long long euler_characteristic(const PlanarComplex& x);

/// Number of connected components of the complement of the support,
/// counted by clipping to a box with unit margin around the vertices and
/// walking the faces of the clipped planar graph.
size_t region_count_oracle(const PlanarComplex& x);

bool is_balanced(const PlanarComplex& x);
bool is_balanced_fan(const WeightedFan& f);

/// One ray per unbounded direction, weighted vectors summed over
/// same-direction rays; based at the origin.
WeightedFan recession_fan(const PlanarComplex& x);

PlanarComplex complex_of_fan(const WeightedFan& f);

/// Support intersection as an unweighted complex (possibly with isolated
/// points); all weights are set to 1.
PlanarComplex intersection_complex(const PlanarComplex& a, const PlanarComplex& b);

bool support_contains(const PlanarComplex& x, const Vec2& p);

/// 1-cells common to both complexes, each at the smaller of the two
/// weights; empty when the supports share no 1-cell.
PlanarComplex common_cells(const PlanarComplex& a, const PlanarComplex& b);

/// w_x <= w_y cellwise: every cell of x is covered by a cell of y of at
/// least its weight.
bool dominates(const PlanarComplex& y, const PlanarComplex& x);

}  // namespace tropmin
