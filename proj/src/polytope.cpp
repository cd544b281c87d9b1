#include "tropmin/polytope.hpp"

#include "tropmin/fm.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

namespace tropmin {

namespace {

std::vector<Point> dedup_points(const std::vector<Point>& points)
{
    std::set<Point> seen;
    std::vector<Point> out;
    for (const auto& p : points)
        if (seen.insert(p).second)
            out.push_back(p);
    return out;
}

// Indices i1 < i2 < ... such that p[i] - p[base] form a basis of the
// direction space of the affine hull.
struct AffineFrame {
    size_t base = 0;
    std::vector<size_t> basis;  // affine dim = basis.size()
};

AffineFrame affine_frame(const std::vector<Point>& pts)
{
    AffineFrame fr;
    size_t n = pts.size(), d = pts[0].size();
    QMat rows;  // current independent direction vectors
    for (size_t i = 1; i < n && rows.size() < d; ++i) {
        QVec v = qvec_sub(pts[i], pts[fr.base]);
        QMat trial = rows;
        trial.push_back(v);
        if (rank(trial) == trial.size()) {
            rows.push_back(std::move(v));
            fr.basis.push_back(i);
        }
    }
    return fr;
}

void scale_primitive(QVec& normal, Rational& offset)
{
    Integer l(1);
    for (const auto& c : normal)
        l = boost::multiprecision::lcm(l, denom(c));
    l = boost::multiprecision::lcm(l, denom(offset));
    Integer g(0);
    auto acc = [&](const Rational& c) {
        Integer scaled = numer(c) * (l / denom(c));
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(scaled));
    };
    for (const auto& c : normal)
        acc(c);
    acc(offset);
    if (g == 0)
        g = 1;
    Rational f = Rational(l) / Rational(g);
    for (auto& c : normal)
        c *= f;
    offset *= f;
}

// Double description run over the homogenized polar cone. `pts` must be
// full-dimensional in R^k with interior point z; returns the facets of
// conv(pts).
std::vector<Facet> dd_facets(const std::vector<Point>& pts, const Point& z)
{
    size_t k = pts[0].size();
    size_t n = pts.size();
    // cone rows r_i = (-1, p_i - z) acting on (y0, y):  <a_i,y> <= y0
    QMat rows(n, QVec(k + 1));
    for (size_t i = 0; i < n; ++i) {
        rows[i][0] = -1;
        for (size_t j = 0; j < k; ++j)
            rows[i][j + 1] = pts[i][j] - z[j];
    }

    // initial simplicial cone from k+1 independent rows
    std::vector<size_t> init;
    {
        QMat chosen;
        for (size_t i = 0; i < n && init.size() < k + 1; ++i) {
            QMat trial = chosen;
            trial.push_back(rows[i]);
            if (rank(trial) == trial.size()) {
                chosen.push_back(rows[i]);
                init.push_back(i);
            }
        }
        assert(init.size() == k + 1 && "points not full-dimensional");
    }

    struct Gen {
        QVec vec;                 // k+1 coordinates
        std::vector<bool> tight;  // over all n rows
    };

    auto normalize_gen = [&](Gen& g) {
        Integer l(1);
        for (const auto& c : g.vec)
            l = boost::multiprecision::lcm(l, denom(c));
        Integer gc(0);
        for (const auto& c : g.vec)
            gc = boost::multiprecision::gcd(
                gc, boost::multiprecision::abs(numer(c) * (l / denom(c))));
        if (gc == 0)
            gc = 1;
        Rational f = Rational(l) / Rational(gc);
        for (auto& c : g.vec)
            c *= f;
    };

    // generators of {x : M x <= 0}: columns of -M^{-1}
    std::vector<Gen> gens;
    {
        QMat m(k + 1, QVec(k + 1));
        for (size_t i = 0; i <= k; ++i)
            m[i] = rows[init[i]];
        for (size_t j = 0; j <= k; ++j) {
            QVec e(k + 1, Rational(0));
            e[j] = -1;
            auto col = solve_square(m, e);
            assert(col);
            Gen g;
            g.vec = *col;
            g.tight.assign(n, false);
            for (size_t i = 0; i <= k; ++i)
                g.tight[init[i]] = (i != j);
            normalize_gen(g);
            gens.push_back(std::move(g));
        }
    }

    std::vector<bool> processed(n, false);
    for (size_t i = 0; i <= k; ++i)
        processed[init[i]] = true;

    auto tight_subset = [&](const std::vector<bool>& a, const std::vector<bool>& b) {
        // a subset-of b over processed rows
        for (size_t i = 0; i < n; ++i)
            if (a[i] && !b[i])
                return false;
        return true;
    };

    for (size_t r = 0; r < n; ++r) {
        if (processed[r])
            continue;
        processed[r] = true;
        std::vector<int> side(gens.size());
        std::vector<Rational> val(gens.size());
        bool any_pos = false;
        for (size_t g = 0; g < gens.size(); ++g) {
            val[g] = qvec_dot(rows[r], gens[g].vec);
            side[g] = sign(val[g]);
            if (side[g] > 0)
                any_pos = true;
        }
        if (!any_pos) {
            for (size_t g = 0; g < gens.size(); ++g)
                if (side[g] == 0)
                    gens[g].tight[r] = true;
            continue;
        }
        std::vector<Gen> fresh;
        for (size_t gp = 0; gp < gens.size(); ++gp) {
            if (side[gp] <= 0)
                continue;
            for (size_t gm = 0; gm < gens.size(); ++gm) {
                if (side[gm] >= 0)
                    continue;
                // adjacency: no third generator tight on the common set
                std::vector<bool> common(n, false);
                size_t ncommon = 0;
                for (size_t i = 0; i < n; ++i) {
                    common[i] = gens[gp].tight[i] && gens[gm].tight[i];
                    if (common[i])
                        ++ncommon;
                }
                if (k >= 2 && ncommon + 2 < k + 1)
                    continue;
                bool adjacent = true;
                for (size_t h = 0; h < gens.size(); ++h) {
                    if (h == gp || h == gm)
                        continue;
                    if (tight_subset(common, gens[h].tight)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent)
                    continue;
                Gen nu;
                nu.vec.resize(k + 1);
                for (size_t j = 0; j <= k; ++j)
                    nu.vec[j] = val[gp] * gens[gm].vec[j] - val[gm] * gens[gp].vec[j];
                nu.tight = common;
                nu.tight[r] = true;
                normalize_gen(nu);
                fresh.push_back(std::move(nu));
            }
        }
        std::vector<Gen> next;
        for (size_t g = 0; g < gens.size(); ++g) {
            if (side[g] <= 0) {
                if (side[g] == 0)
                    gens[g].tight[r] = true;
                next.push_back(std::move(gens[g]));
            }
        }
        for (auto& nu : fresh)
            next.push_back(std::move(nu));
        gens = std::move(next);
    }

    std::vector<Facet> facets;
    std::set<std::pair<QVec, Rational>> seen;
    for (const auto& g : gens) {
        assert(g.vec[0] > 0 && "polar generator must have positive height");
        Facet f;
        f.normal.resize(k);
        for (size_t j = 0; j < k; ++j)
            f.normal[j] = g.vec[j + 1] / g.vec[0];
        f.offset = 1 + qvec_dot(f.normal, z);
        scale_primitive(f.normal, f.offset);
        if (seen.insert({f.normal, f.offset}).second)
            facets.push_back(std::move(f));
    }
    return facets;
}

}  // namespace

std::vector<size_t> hull2d_ccw(const std::vector<Vec2>& pts)
{
    std::vector<size_t> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return pts[a] < pts[b]; });
    idx.erase(std::unique(idx.begin(), idx.end(),
                          [&](size_t a, size_t b) { return pts[a] == pts[b]; }),
              idx.end());
    size_t n = idx.size();
    if (n <= 2)
        return idx;
    auto turn = [&](size_t o, size_t a, size_t b) {
        return cross(pts[a] - pts[o], pts[b] - pts[o]);
    };
    std::vector<size_t> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && turn(h[k - 2], h[k - 1], idx[i]) <= 0)
            --k;
        h[k++] = idx[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper chain
        while (k >= t && turn(h[k - 2], h[k - 1], idx[i]) <= 0)
            --k;
        h[k++] = idx[i];
    }
    h.resize(k - 1);
    if (h.size() < 3)  // all collinear: keep the two extremes
        h.resize(std::min<size_t>(2, h.size()));
    return h;
}

Polytope convex_hull(const std::vector<Point>& points, size_t dim)
{
    if (dim < 2 || dim > 4)
        throw DimensionMismatch("convex_hull supports ambient dimension 2..4");
    if (points.empty())
        throw std::invalid_argument("convex_hull of empty point set");
    for (const auto& p : points)
        if (p.size() != dim)
            throw DimensionMismatch("point dimension mismatch");

    std::vector<Point> pts = dedup_points(points);
    Polytope poly;
    poly.dim = dim;

    AffineFrame fr = affine_frame(pts);
    size_t adim = fr.basis.size();
    poly.affine_dim = adim;

    if (adim == 0) {
        poly.vertices = {pts[0]};
        return poly;
    }

    // coordinates within the affine hull
    std::vector<Point> coords;
    if (adim == dim) {
        coords = pts;
    } else {
        QMat basis_t(dim, QVec(adim));  // columns are basis directions
        for (size_t j = 0; j < adim; ++j) {
            QVec b = qvec_sub(pts[fr.basis[j]], pts[fr.base]);
            for (size_t i = 0; i < dim; ++i)
                basis_t[i][j] = b[i];
        }
        coords.reserve(pts.size());
        for (const auto& p : pts) {
            auto t = solve_full_column_rank(basis_t, qvec_sub(p, pts[fr.base]));
            assert(t && "point outside its own affine hull");
            coords.push_back(*t);
        }
    }

    if (adim == 1) {
        // segment: extremes along the 1-d coordinate
        size_t lo = 0, hi = 0;
        for (size_t i = 1; i < coords.size(); ++i) {
            if (coords[i][0] < coords[lo][0])
                lo = i;
            if (coords[i][0] > coords[hi][0])
                hi = i;
        }
        poly.vertices = {pts[lo], pts[hi]};
        std::sort(poly.vertices.begin(), poly.vertices.end());
        return poly;
    }

    // interior point of the hull: centroid of the frame simplex
    Point z(adim, Rational(0));
    {
        std::vector<size_t> simplex{fr.base};
        simplex.insert(simplex.end(), fr.basis.begin(), fr.basis.end());
        for (size_t s : simplex)
            for (size_t j = 0; j < adim; ++j)
                z[j] += coords[s][j];
        for (auto& c : z)
            c /= Rational(simplex.size());
    }

    std::vector<Facet> facets = dd_facets(coords, z);

    // vertex = point whose tight facet normals span the space
    std::vector<std::vector<size_t>> on_facets(coords.size());
    for (size_t f = 0; f < facets.size(); ++f)
        for (size_t i = 0; i < coords.size(); ++i)
            if (qvec_dot(facets[f].normal, coords[i]) == facets[f].offset)
                on_facets[i].push_back(f);
    std::vector<size_t> vert_ids;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (on_facets[i].size() < adim)
            continue;
        QMat m;
        for (size_t f : on_facets[i])
            m.push_back(facets[f].normal);
        if (rank(m) == adim)
            vert_ids.push_back(i);
    }
    std::sort(vert_ids.begin(), vert_ids.end(),
              [&](size_t a, size_t b) { return pts[a] < pts[b]; });

    std::vector<size_t> new_id(coords.size(), SIZE_MAX);
    for (size_t v = 0; v < vert_ids.size(); ++v) {
        poly.vertices.push_back(pts[vert_ids[v]]);
        new_id[vert_ids[v]] = v;
    }
    if (adim == dim) {
        for (auto& f : facets) {
            for (size_t i = 0; i < coords.size(); ++i)
                if (new_id[i] != SIZE_MAX &&
                    qvec_dot(f.normal, coords[i]) == f.offset)
                    f.vertex_ids.push_back(new_id[i]);
            std::sort(f.vertex_ids.begin(), f.vertex_ids.end());
        }
        std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
            return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
        });
        poly.facets = std::move(facets);
    }
    return poly;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q)
{
    if (p.dim != q.dim)
        throw DimensionMismatch("minkowski_sum: ambient dimensions differ");
    std::vector<Point> sums;
    sums.reserve(p.vertices.size() * q.vertices.size());
    for (const auto& a : p.vertices)
        for (const auto& b : q.vertices)
            sums.push_back(qvec_add(a, b));
    return convex_hull(sums, p.dim);
}

std::vector<size_t> upper_facets(const Polytope& p)
{
    std::vector<size_t> out;
    for (size_t f = 0; f < p.facets.size(); ++f)
        if (p.facets[f].normal.back() > 0)
            out.push_back(f);
    return out;
}

std::vector<Point> upper_vertices(const Polytope& p)
{
    if (p.full_dimensional()) {
        std::set<size_t> ids;
        for (size_t f : upper_facets(p))
            for (size_t v : p.facets[f].vertex_ids)
                ids.insert(v);
        std::vector<Point> out;
        for (size_t v : ids)
            out.push_back(p.vertices[v]);
        return out;
    }
    // Degenerate hull. A vertex v is upper iff some functional
    // t - <a, x> is uniquely maximized at v; strict feasibility over a.
    std::vector<Point> out;
    size_t d = p.dim - 1;
    for (size_t i = 0; i < p.vertices.size(); ++i) {
        std::vector<StrictRow> rows;
        for (size_t j = 0; j < p.vertices.size(); ++j) {
            if (j == i)
                continue;
            StrictRow r;
            r.coeffs.resize(d);
            for (size_t c = 0; c < d; ++c)
                r.coeffs[c] = p.vertices[i][c] - p.vertices[j][c];
            r.rhs = p.vertices[i].back() - p.vertices[j].back();
            rows.push_back(std::move(r));
        }
        if (strict_system_feasible(std::move(rows), d))
            out.push_back(p.vertices[i]);
    }
    return out;
}

}  // namespace tropmin
