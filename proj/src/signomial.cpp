#include "tropmin/signomial.hpp"

#include "tropmin/fm.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace tropmin {

Signomial::Signomial(size_t dim, std::vector<Monomial> monomials) : dim_(dim)
{
    if (monomials.empty())
        throw std::invalid_argument("signomial must have at least one monomial");
    std::map<QVec, Rational> merged;
    for (auto& m : monomials) {
        if (m.exps.size() != dim)
            throw DimensionMismatch("monomial exponent dimension mismatch");
        auto [it, fresh] = merged.emplace(std::move(m.exps), m.coeff);
        if (!fresh && m.coeff > it->second)
            it->second = m.coeff;
    }
    for (auto& [e, c] : merged)
        monomials_.push_back({c, e});
}

Factorization::Factorization(std::vector<Signomial> fs) : factors(std::move(fs))
{
    if (factors.empty())
        throw std::invalid_argument("factorization must have at least one factor");
    for (const auto& f : factors)
        if (f.dim() != factors.front().dim())
            throw DimensionMismatch("factors must share the ambient dimension");
}

RationalRep::RationalRep(Factorization n, Factorization d)
    : num(std::move(n)), den(std::move(d))
{
    if (num.dim() != den.dim())
        throw DimensionMismatch("numerator and denominator dimensions differ");
}

Rational evaluate(const Signomial& s, const Point& x)
{
    if (x.size() != s.dim())
        throw DimensionMismatch("evaluation point dimension mismatch");
    const auto& ms = s.monomials();
    Rational best = ms[0].coeff + qvec_dot(ms[0].exps, x);
    for (size_t i = 1; i < ms.size(); ++i) {
        Rational v = ms[i].coeff + qvec_dot(ms[i].exps, x);
        if (v > best)
            best = v;
    }
    return best;
}

Rational evaluate(const Factorization& f, const Point& x)
{
    Rational s = 0;
    for (const auto& g : f.factors)
        s += evaluate(g, x);
    return s;
}

Rational evaluate_rational(const RationalRep& r, const Point& x)
{
    return evaluate(r.num, x) - evaluate(r.den, x);
}

Signomial expand(const Factorization& f)
{
    size_t total = 1;
    for (const auto& g : f.factors) {
        total *= g.size();
        if (total > 200000)
            throw std::invalid_argument("expansion too large");
    }
    size_t dim = f.dim();
    std::vector<Monomial> acc{{Rational(0), QVec(dim, Rational(0))}};
    for (const auto& g : f.factors) {
        std::vector<Monomial> next;
        next.reserve(acc.size() * g.size());
        for (const auto& a : acc) {
            for (const auto& m : g.monomials()) {
                Monomial s;
                s.coeff = a.coeff + m.coeff;
                s.exps = qvec_add(a.exps, m.exps);
                next.push_back(std::move(s));
            }
        }
        // merge duplicates as we go to keep intermediate sizes down
        std::map<QVec, Rational> merged;
        for (auto& m : next) {
            auto [it, fresh] = merged.emplace(std::move(m.exps), m.coeff);
            if (!fresh && m.coeff > it->second)
                it->second = m.coeff;
        }
        acc.clear();
        for (auto& [e, c] : merged)
            acc.push_back({c, e});
    }
    return Signomial(dim, std::move(acc));
}

Signomial reduce(const Signomial& s)
{
    const auto& ms = s.monomials();
    if (ms.size() == 1)
        return s;
    size_t d = s.dim();
    std::vector<Monomial> kept;
    for (size_t i = 0; i < ms.size(); ++i) {
        // monomial i is essential iff it strictly wins somewhere:
        // exists x with <e_i - e_j, x> > c_j - c_i for all j != i
        std::vector<StrictRow> rows;
        rows.reserve(ms.size() - 1);
        for (size_t j = 0; j < ms.size(); ++j) {
            if (j == i)
                continue;
            StrictRow r;
            r.coeffs = qvec_sub(ms[j].exps, ms[i].exps);
            r.rhs = ms[i].coeff - ms[j].coeff;
            rows.push_back(std::move(r));
        }
        if (strict_system_feasible(std::move(rows), d))
            kept.push_back(ms[i]);
    }
    return Signomial(d, std::move(kept));
}

size_t mlen(const Signomial& s) { return reduce(s).size(); }

size_t flen(const Factorization& f)
{
    size_t total = 0;
    for (const auto& g : f.factors)
        total += mlen(g);
    return total - (f.factors.size() - 1);
}

Polytope newton_polytope(const Signomial& s)
{
    if (s.dim() < 2 || s.dim() > 3)
        throw DimensionMismatch("newton_polytope supports 2 or 3 variables");
    std::vector<Point> pts;
    for (const auto& m : s.monomials())
        pts.push_back(m.exps);
    return convex_hull(pts, s.dim());
}

Polytope lifted_newton(const Signomial& s)
{
    if (s.dim() < 1 || s.dim() > 3)
        throw DimensionMismatch("lifted_newton supports 1..3 variables");
    std::vector<Point> pts;
    for (const auto& m : s.monomials()) {
        Point p = m.exps;
        p.push_back(m.coeff);
        pts.push_back(std::move(p));
    }
    return convex_hull(pts, s.dim() + 1);
}

namespace {

std::vector<Vec2> ccw_polygon(const std::vector<Vec2>& pts)
{
    auto ids = hull2d_ccw(pts);
    std::vector<Vec2> out;
    for (size_t i : ids)
        out.push_back(pts[i]);
    return out;
}

void add_vertices(std::vector<Vec2>& verts, const std::vector<Vec2>& more)
{
    for (const auto& v : more)
        verts.push_back(v);
}

}  // namespace

Subdivision regular_subdivision(const Signomial& s)
{
    if (s.dim() != 2)
        throw DimensionMismatch("regular_subdivision is for 2-variable signomials");
    const auto& ms = s.monomials();
    std::vector<Vec2> exps;
    for (const auto& m : ms)
        exps.push_back(exps2(m));

    Subdivision sub;
    {
        std::vector<Point> pts;
        for (const auto& m : ms)
            pts.push_back(m.exps);
        sub.base = convex_hull(pts, 2);
    }

    if (sub.base.affine_dim == 0) {
        SubdivisionCell cell;
        cell.polygon = {exps[0]};
        cell.points = {exps[0]};
        cell.gradient = Vec2(0, 0);
        cell.height_offset = ms[0].coeff;
        sub.cells.push_back(std::move(cell));
        sub.vertices = {exps[0]};
        return sub;
    }

    if (sub.base.affine_dim == 1) {
        // all exponents on a line: a 1-d regular subdivision along it
        Vec2 origin = exps[0];
        Vec2 dir;
        for (const auto& e : exps)
            if (e != origin) {
                dir = primitive_oriented(e - origin);
                break;
            }
        Rational dd = dot(dir, dir);
        // upper hull of (t, coeff)
        std::vector<Vec2> lifted;
        for (size_t i = 0; i < ms.size(); ++i)
            lifted.push_back({dot(exps[i] - origin, dir) / dd, ms[i].coeff});
        auto hull_ids = hull2d_ccw(lifted);
        // walk the ccw cycle and keep the chain where t decreases: that is
        // the upper chain; reverse it to get increasing t
        std::vector<size_t> upper;
        if (hull_ids.size() <= 2) {
            upper = hull_ids;
            std::sort(upper.begin(), upper.end(), [&](size_t a, size_t b) {
                return lifted[a].x < lifted[b].x;
            });
        } else {
            size_t n = hull_ids.size();
            size_t lo = 0, hi = 0;
            for (size_t i = 1; i < n; ++i) {
                if (lifted[hull_ids[i]] < lifted[hull_ids[lo]])
                    lo = i;
                if (lifted[hull_ids[hi]] < lifted[hull_ids[i]])
                    hi = i;
            }
            for (size_t i = hi;; i = (i + 1) % n) {  // ccw from right end to left end
                upper.push_back(hull_ids[i]);
                if (i == lo)
                    break;
            }
            std::reverse(upper.begin(), upper.end());
        }
        for (size_t u : upper)
            sub.vertices.push_back(exps[u]);
        for (size_t c = 0; c + 1 < upper.size(); ++c) {
            const Vec2 a = lifted[upper[c]], b = lifted[upper[c + 1]];
            SubdivisionCell cell;
            cell.polygon = {exps[upper[c]], exps[upper[c + 1]]};
            for (size_t i = 0; i < ms.size(); ++i) {
                const Vec2& p = lifted[i];
                if (cross(b - a, p - a) == 0 && a.x <= p.x && p.x <= b.x)
                    cell.points.push_back(exps[i]);
            }
            // support of the lifted segment: coeff = slope * t + off
            Rational slope = (b.y - a.y) / (b.x - a.x);
            cell.gradient = Vec2(slope * dir.x / dd, slope * dir.y / dd);
            cell.height_offset = a.y - slope * a.x - dot(cell.gradient, origin);
            sub.cells.push_back(std::move(cell));
        }
        return sub;
    }

    Polytope lift = lifted_newton(s);

    if (lift.affine_dim == 2) {
        // all lifted points on one (non-vertical) plane: trivial subdivision
        SubdivisionCell cell;
        cell.polygon = ccw_polygon(exps);
        cell.points = exps;
        // fit coeff = <a, e> + b through three affinely independent points
        QMat m;
        QVec rhs;
        for (const auto& mon : ms) {
            m.push_back({mon.exps[0], mon.exps[1], Rational(1)});
            rhs.push_back(mon.coeff);
        }
        QMat sys;
        QVec b;
        for (size_t i = 0; i < m.size() && sys.size() < 3; ++i) {
            QMat trial = sys;
            trial.push_back(m[i]);
            if (rank(trial) == trial.size()) {
                sys.push_back(m[i]);
                b.push_back(rhs[i]);
            }
        }
        auto sol = solve_square(sys, b);
        assert(sol);
        cell.gradient = Vec2((*sol)[0], (*sol)[1]);
        cell.height_offset = (*sol)[2];
        sub.vertices = cell.polygon;
        sub.cells.push_back(std::move(cell));
        return sub;
    }

    std::vector<Vec2> verts;
    for (size_t f : upper_facets(lift)) {
        const Facet& fac = lift.facets[f];
        SubdivisionCell cell;
        std::vector<Vec2> cell_verts;
        for (size_t v : fac.vertex_ids)
            cell_verts.push_back({lift.vertices[v][0], lift.vertices[v][1]});
        cell.polygon = ccw_polygon(cell_verts);
        for (size_t i = 0; i < ms.size(); ++i) {
            Rational lhs = fac.normal[0] * ms[i].exps[0] +
                           fac.normal[1] * ms[i].exps[1] + fac.normal[2] * ms[i].coeff;
            if (lhs == fac.offset)
                cell.points.push_back(exps[i]);
        }
        cell.gradient = Vec2(-fac.normal[0] / fac.normal[2], -fac.normal[1] / fac.normal[2]);
        cell.height_offset = fac.offset / fac.normal[2];
        add_vertices(verts, cell.polygon);
        sub.cells.push_back(std::move(cell));
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    sub.vertices = std::move(verts);
    return sub;
}

}  // namespace tropmin
