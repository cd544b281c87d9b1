#pragma once

#include "tropmin/linalg.hpp"
#include "tropmin/vec.hpp"

#include <stdexcept>
#include <vector>

namespace tropmin {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Point = QVec;

/// Supporting hyperplane <normal, x> <= offset, touching the hull in a
/// facet. Normals are outward and scaled to a primitive integer vector.
struct Facet {
    QVec normal;
    Rational offset;
    std::vector<size_t> vertex_ids;  // indices into Polytope::vertices
};

/// Convex hull of an exact point set in ambient dimension 2..4.
///
/// Vertices are always the extreme points of the input, kept with their
/// original coordinates. Facets are populated for full-dimensional hulls
/// only; lower-dimensional hulls carry their affine dimension instead of
/// erroring (non-generic inputs are first-class here).
struct Polytope {
    size_t dim = 0;         // ambient dimension
    size_t affine_dim = 0;  // dimension of the affine hull
    std::vector<Point> vertices;
    std::vector<Facet> facets;  // empty unless affine_dim == dim

    bool full_dimensional() const { return affine_dim == dim; }
};

Polytope convex_hull(const std::vector<Point>& points, size_t dim);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// Vertices on at least one facet whose outward normal has a strictly
/// positive last coordinate. Lower-dimensional hulls fall back to the
/// defining property: v is upper iff it is the unique maximizer of the
/// last coordinate minus some linear functional of the others.
std::vector<Point> upper_vertices(const Polytope& p);

/// Indices of the facets with strictly positive last normal coordinate.
std::vector<size_t> upper_facets(const Polytope& p);

/// Counterclockwise hull of a planar point set; returns indices into pts,
/// collinear non-extreme points dropped. Handles 0/1-dimensional input
/// (returns the extreme points).
std::vector<size_t> hull2d_ccw(const std::vector<Vec2>& pts);

}  // namespace tropmin
