#include "tropmin/planar.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace tropmin {

namespace {

Vec2 piece_dirvec(const Piece& p)
{
    return p.is_ray ? p.dir : p.b - p.a;
}

Rational param_of(const Piece& p, const Vec2& q)
{
    Vec2 d = piece_dirvec(p);
    return dot(q - p.a, d) / dot(d, d);
}

bool param_in_range(const Piece& p, const Rational& t)
{
    if (t < 0)
        return false;
    return p.is_ray || t <= 1;
}

}  // namespace

Piece Piece::segment(Vec2 p, Vec2 q, Rational lambda)
{
    if (p == q)
        throw std::invalid_argument("zero-length segment");
    Piece out;
    out.is_ray = false;
    out.a = std::move(p);
    out.b = std::move(q);
    auto ps = primitive_line(out.b - out.a);
    out.wprim = ps.prim;
    out.wlam = std::move(lambda);
    return out;
}

Piece Piece::ray(Vec2 base, Vec2 direction, Rational lambda)
{
    if (direction.is_zero())
        throw std::invalid_argument("ray needs a nonzero direction");
    Piece out;
    out.is_ray = true;
    out.a = std::move(base);
    out.dir = primitive_oriented(direction);
    auto ps = primitive_line(out.dir);
    out.wprim = ps.prim;
    out.wlam = std::move(lambda);
    return out;
}

std::vector<Piece> line_pieces(const Vec2& point, const Vec2& direction, Rational lambda)
{
    Vec2 d = primitive_oriented(direction);
    return {Piece::ray(point, d, lambda), Piece::ray(point, -d, lambda)};
}

std::vector<Piece> pieces_of(const PlanarComplex& x, int sgn)
{
    std::vector<Piece> out;
    for (const auto& e : x.edges) {
        Rational lam = e.w.lambda * sgn;
        if (e.kind == PCEdge::Segment)
            out.push_back(Piece::segment(x.vertices[e.a], x.vertices[e.b], lam));
        else
            out.push_back(Piece::ray(x.vertices[e.a], e.dir, lam));
    }
    return out;
}

namespace {

// Common refinement: split every piece at every point where another
// piece's support meets it, then merge coincident sub-cells by summing
// their signed weights.
struct Refined {
    // segment cells keyed by their endpoints, ray cells by base+direction
    std::map<std::pair<Vec2, Vec2>, std::pair<Vec2, Rational>> segs;  // -> (wprim, lam)
    std::map<std::pair<Vec2, Vec2>, std::pair<Vec2, Rational>> rays;
};

Refined refine(const std::vector<Piece>& pieces)
{
    size_t n = pieces.size();
    std::vector<std::vector<Rational>> events(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const Piece &p = pieces[i], &q = pieces[j];
            Vec2 dp = piece_dirvec(p), dq = piece_dirvec(q);
            Rational den = cross(dp, dq);
            if (den != 0) {
                Rational ti = cross(q.a - p.a, dq) / den;
                Rational tj = cross(q.a - p.a, dp) / den;
                if (param_in_range(p, ti) && param_in_range(q, tj)) {
                    events[i].push_back(ti);
                    events[j].push_back(tj);
                }
            } else if (cross(q.a - p.a, dp) == 0) {
                // collinear: endpoints of each are events on the other
                auto push = [&](size_t host, const Piece& hp, const Vec2& pt) {
                    Rational t = param_of(hp, pt);
                    if (param_in_range(hp, t))
                        events[host].push_back(t);
                };
                push(i, p, q.a);
                if (!q.is_ray)
                    push(i, p, q.b);
                push(j, q, p.a);
                if (!p.is_ray)
                    push(j, q, p.b);
            }
        }
    }

    Refined r;
    auto add = [](auto& store, std::pair<Vec2, Vec2> key, const Vec2& wprim,
                  const Rational& lam) {
        auto [it, fresh] = store.emplace(std::move(key), std::make_pair(wprim, lam));
        if (!fresh) {
            assert(it->second.first == wprim);
            it->second.second += lam;
        }
    };
    for (size_t i = 0; i < n; ++i) {
        const Piece& p = pieces[i];
        std::vector<Rational> ts = std::move(events[i]);
        ts.push_back(Rational(0));
        if (!p.is_ray)
            ts.push_back(Rational(1));
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        Vec2 d = piece_dirvec(p);
        for (size_t k = 0; k + 1 < ts.size(); ++k) {
            Vec2 u = p.a + d * ts[k];
            Vec2 v = p.a + d * ts[k + 1];
            std::pair<Vec2, Vec2> key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
            add(r.segs, std::move(key), p.wprim, p.wlam);
        }
        if (p.is_ray)
            add(r.rays, {p.a + d * ts.back(), p.dir}, p.wprim, p.wlam);
    }
    return r;
}

struct CellSoup {
    // sign-split refined cells with positive lambdas
    std::vector<std::tuple<Vec2, Vec2, EdgeVec>> segs;  // (u, v, w)
    std::vector<std::tuple<Vec2, Vec2, EdgeVec>> rays;  // (base, dir, w)
};

void split_by_sign(const Refined& r, CellSoup& pos, CellSoup& neg)
{
    for (const auto& [key, wl] : r.segs) {
        if (wl.second == 0)
            continue;
        EdgeVec w{wl.first, rational_abs(wl.second)};
        (wl.second > 0 ? pos : neg).segs.emplace_back(key.first, key.second, w);
    }
    for (const auto& [key, wl] : r.rays) {
        if (wl.second == 0)
            continue;
        EdgeVec w{wl.first, rational_abs(wl.second)};
        (wl.second > 0 ? pos : neg).rays.emplace_back(key.first, key.second, w);
    }
}

PlanarComplex complex_from_cells(CellSoup soup, const std::vector<Vec2>& isolated,
                                 bool keep_isolated)
{
    // dissolve collinear degree-2 vertices with equal weighted vectors
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<Vec2, std::vector<std::pair<char, size_t>>> deg;  // 's'/'r', index
        for (size_t i = 0; i < soup.segs.size(); ++i) {
            deg[std::get<0>(soup.segs[i])].push_back({'s', i});
            deg[std::get<1>(soup.segs[i])].push_back({'s', i});
        }
        for (size_t i = 0; i < soup.rays.size(); ++i)
            deg[std::get<0>(soup.rays[i])].push_back({'r', i});
        for (const auto& [v, inc] : deg) {
            if (inc.size() != 2)
                continue;
            auto [k1, i1] = inc[0];
            auto [k2, i2] = inc[1];
            if (k1 == 'r' && k2 == 'r')
                continue;  // a full line keeps its base vertex
            const EdgeVec& w1 = k1 == 's' ? std::get<2>(soup.segs[i1]) : std::get<2>(soup.rays[i1]);
            const EdgeVec& w2 = k2 == 's' ? std::get<2>(soup.segs[i2]) : std::get<2>(soup.rays[i2]);
            if (!(w1 == w2))
                continue;
            // both cells must lie on one line through v
            auto other_end = [&](char k, size_t i) -> std::optional<Vec2> {
                if (k == 's') {
                    const auto& [u, vv, w] = soup.segs[i];
                    return u == v ? vv : u;
                }
                return std::nullopt;
            };
            Vec2 d1 = k1 == 's' ? *other_end(k1, i1) - v : std::get<1>(soup.rays[i1]);
            Vec2 d2 = k2 == 's' ? *other_end(k2, i2) - v : std::get<1>(soup.rays[i2]);
            if (cross(d1, d2) != 0 || dot(d1, d2) >= 0)
                continue;  // must continue straight through v
            if (k1 == 's' && k2 == 's') {
                Vec2 u1 = *other_end(k1, i1), u2 = *other_end(k2, i2);
                soup.segs[i1] = {std::min(u1, u2), std::max(u1, u2), w1};
                soup.segs.erase(soup.segs.begin() + static_cast<long>(i2));
            } else {
                char kr = k1 == 'r' ? k1 : k2;
                size_t ir = kr == k1 ? i1 : i2;
                size_t is = kr == k1 ? i2 : i1;
                Vec2 base = *other_end('s', is);
                soup.rays[ir] = {base, std::get<1>(soup.rays[ir]), w1};
                soup.segs.erase(soup.segs.begin() + static_cast<long>(is));
            }
            changed = true;
            break;  // indices shifted; rescan
        }
    }

    PlanarComplex out;
    std::map<Vec2, size_t> vid;
    auto id_of = [&](const Vec2& p) {
        auto [it, fresh] = vid.emplace(p, vid.size());
        (void)fresh;
        return it->second;
    };
    std::set<Vec2> endpoint_set;
    for (const auto& [u, v, w] : soup.segs) {
        endpoint_set.insert(u);
        endpoint_set.insert(v);
    }
    for (const auto& [b, d, w] : soup.rays)
        endpoint_set.insert(b);
    for (const auto& p : endpoint_set)
        id_of(p);
    if (keep_isolated) {
        for (const auto& p : isolated) {
            bool on_cell = false;
            for (const auto& [u, v, w] : soup.segs) {
                if (cross(v - u, p - u) == 0 && dot(p - u, v - u) >= 0 &&
                    dot(p - v, u - v) >= 0) {
                    on_cell = true;
                    break;
                }
            }
            if (!on_cell)
                for (const auto& [b, d, w] : soup.rays)
                    if (cross(d, p - b) == 0 && dot(p - b, d) >= 0) {
                        on_cell = true;
                        break;
                    }
            if (!on_cell)
                id_of(p);
        }
    }
    out.vertices.resize(vid.size());
    for (const auto& [p, i] : vid)
        out.vertices[i] = p;
    for (const auto& [u, v, w] : soup.segs) {
        PCEdge e;
        e.kind = PCEdge::Segment;
        e.a = vid.at(u);
        e.b = vid.at(v);
        if (e.a > e.b)
            std::swap(e.a, e.b);
        e.w = w;
        out.edges.push_back(std::move(e));
    }
    for (const auto& [b, d, w] : soup.rays) {
        PCEdge e;
        e.kind = PCEdge::Ray;
        e.a = vid.at(b);
        e.dir = d;
        e.w = w;
        out.edges.push_back(std::move(e));
    }
    std::sort(out.edges.begin(), out.edges.end(), [](const PCEdge& x, const PCEdge& y) {
        if (x.kind != y.kind)
            return x.kind < y.kind;
        if (x.a != y.a)
            return x.a < y.a;
        if (x.kind == PCEdge::Segment)
            return x.b < y.b;
        return x.dir < y.dir;
    });
    return out;
}

}  // namespace

PlanarComplex assemble(std::vector<Piece> pieces, const std::vector<Vec2>& isolated_points,
                       bool keep_isolated)
{
    Refined r = refine(pieces);
    CellSoup pos, neg;
    split_by_sign(r, pos, neg);
    if (!neg.segs.empty() || !neg.rays.empty())
        throw std::invalid_argument("assemble: negative net weight in an unsigned complex");
    return complex_from_cells(std::move(pos), isolated_points, keep_isolated);
}

SignedComplex assemble_signed(std::vector<Piece> pieces)
{
    Refined r = refine(pieces);
    CellSoup pos, neg;
    split_by_sign(r, pos, neg);
    SignedComplex out;
    out.pos = complex_from_cells(std::move(pos), {}, false);
    out.neg = complex_from_cells(std::move(neg), {}, false);
    return out;
}

WeightedFan::WeightedFan(Vec2 base_, std::vector<FanRay> rays_) : base(std::move(base_))
{
    std::map<Vec2, Rational> merged;
    for (auto& r : rays_) {
        if (r.lambda <= 0)
            throw std::invalid_argument("fan ray weights must be positive");
        Vec2 d = primitive_oriented(r.dir);
        merged[d] += r.lambda;  // same-direction rays add
    }
    for (auto& [d, lam] : merged)
        rays.push_back({d, lam});
    std::sort(rays.begin(), rays.end(),
              [](const FanRay& a, const FanRay& b) { return angle_less(a.dir, b.dir); });
}

PlanarComplex complex_of_fan(const WeightedFan& f)
{
    std::vector<Piece> pieces;
    for (const auto& r : f.rays)
        pieces.push_back(Piece::ray(f.base, r.dir, r.lambda));
    return assemble(std::move(pieces));
}

PlanarComplex tropical_curve(const Signomial& s)
{
    if (s.dim() != 2)
        throw DimensionMismatch("tropical_curve is for 2-variable signomials");
    Subdivision sub = regular_subdivision(s);
    if (sub.vertices.size() <= 1)
        return {};

    std::vector<Piece> pieces;
    if (sub.base.affine_dim <= 1) {
        // parallel lines, one per 1-cell of the subdivision
        std::map<Vec2, Rational> coeff;
        for (const auto& m : s.monomials()) {
            auto [it, fresh] = coeff.emplace(exps2(m), m.coeff);
            if (!fresh && m.coeff > it->second)
                it->second = m.coeff;
        }
        for (const auto& cell : sub.cells) {
            const Vec2 &ei = cell.polygon[0], &ej = cell.polygon[1];
            Vec2 d = ei - ej;
            Rational rhs = coeff.at(ej) - coeff.at(ei);
            Vec2 point = d * (rhs / dot(d, d));  // on the tie line <d, x> = rhs
            auto ps = primitive_line(rot90(d));
            for (auto& piece : line_pieces(point, ps.prim, ps.lambda))
                pieces.push_back(std::move(piece));
        }
        return assemble(std::move(pieces));
    }

    // dual vertices: one per 2-cell
    std::vector<Vec2> dual(sub.cells.size());
    for (size_t c = 0; c < sub.cells.size(); ++c)
        dual[c] = -sub.cells[c].gradient;

    // subdivision edges shared by two cells become segments, boundary
    // edges become rays in the outward normal direction
    std::map<std::pair<Vec2, Vec2>, std::vector<std::pair<size_t, Vec2>>> edge_cells;
    for (size_t c = 0; c < sub.cells.size(); ++c) {
        const auto& poly = sub.cells[c].polygon;
        for (size_t k = 0; k < poly.size(); ++k) {
            const Vec2& u = poly[k];
            const Vec2& v = poly[(k + 1) % poly.size()];
            auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
            // outward normal of the (ccw) cell at this edge
            edge_cells[key].push_back({c, rot270(v - u)});
        }
    }
    for (const auto& [key, cells] : edge_cells) {
        auto ps = primitive_line(rot90(key.second - key.first));
        if (cells.size() == 2) {
            assert(dual[cells[0].first] != dual[cells[1].first]);
            pieces.push_back(Piece::segment(dual[cells[0].first], dual[cells[1].first],
                                            ps.lambda));
        } else {
            assert(cells.size() == 1);
            pieces.push_back(
                Piece::ray(dual[cells[0].first], cells[0].second, ps.lambda));
        }
    }
    return assemble(std::move(pieces));
}

PlanarComplex overlay(const PlanarComplex& a, const PlanarComplex& b)
{
    std::vector<Piece> pieces = pieces_of(a);
    for (auto& p : pieces_of(b))
        pieces.push_back(std::move(p));
    if (pieces.empty())
        return {};
    return assemble(std::move(pieces));
}

SignedComplex corner_locus(const RationalRep& r)
{
    if (r.dim() != 2)
        throw DimensionMismatch("corner_locus is for 2-variable representations");
    PlanarComplex vg = tropical_curve(expand(r.num));
    PlanarComplex vh = tropical_curve(expand(r.den));
    std::vector<Piece> pieces = pieces_of(vg, +1);
    for (auto& p : pieces_of(vh, -1))
        pieces.push_back(std::move(p));
    if (pieces.empty())
        return {};
    return assemble_signed(std::move(pieces));
}

long long euler_characteristic(const PlanarComplex& x)
{
    return static_cast<long long>(x.vertices.size()) -
           static_cast<long long>(x.edges.size());
}

bool is_balanced(const PlanarComplex& x)
{
    std::vector<Vec2> sums(x.vertices.size(), Vec2(0, 0));
    for (const auto& e : x.edges) {
        if (e.kind == PCEdge::Segment) {
            Vec2 d = x.vertices[e.b] - x.vertices[e.a];
            Vec2 w = e.w.vec();
            if (dot(w, d) < 0)
                w = -w;
            sums[e.a] += w;
            sums[e.b] += -w;
        } else {
            Vec2 w = e.w.vec();
            if (dot(w, e.dir) < 0)
                w = -w;
            sums[e.a] += w;
        }
    }
    for (const auto& s : sums)
        if (!s.is_zero())
            return false;
    return true;
}

bool is_balanced_fan(const WeightedFan& f)
{
    Vec2 s(0, 0);
    for (const auto& r : f.rays)
        s += r.vec();
    return s.is_zero();
}

WeightedFan recession_fan(const PlanarComplex& x)
{
    std::vector<FanRay> rays;
    for (const auto& e : x.edges)
        if (e.kind == PCEdge::Ray)
            rays.push_back({e.dir, e.w.lambda});
    return WeightedFan(Vec2(0, 0), std::move(rays));
}

bool support_contains(const PlanarComplex& x, const Vec2& p)
{
    for (const auto& v : x.vertices)
        if (v == p)
            return true;
    for (const auto& e : x.edges) {
        const Vec2& a = x.vertices[e.a];
        if (e.kind == PCEdge::Segment) {
            const Vec2& b = x.vertices[e.b];
            if (cross(b - a, p - a) == 0 && dot(p - a, b - a) >= 0 && dot(p - b, a - b) >= 0)
                return true;
        } else {
            if (cross(e.dir, p - a) == 0 && dot(p - a, e.dir) >= 0)
                return true;
        }
    }
    return false;
}

PlanarComplex intersection_complex(const PlanarComplex& a, const PlanarComplex& b)
{
    std::vector<Piece> pieces;
    std::vector<Vec2> points;

    auto clip_overlap = [&](const Piece& p, const Piece& q) {
        // collinear overlap of two pieces -> segment, ray or point,
        // computed as an interval in p's parameter
        Vec2 dp = piece_dirvec(p);
        Rational lo(0), hi(0);
        bool hi_inf = false;
        if (q.is_ray) {
            Rational t0 = param_of(p, q.a);
            if (dot(dp, q.dir) > 0) {
                lo = t0;
                hi_inf = true;
            } else {
                lo = Rational(0);
                hi = t0;
            }
        } else {
            Rational ta = param_of(p, q.a), tb = param_of(p, q.b);
            lo = std::min(ta, tb);
            hi = std::max(ta, tb);
        }
        if (lo < 0)
            lo = 0;
        if (!p.is_ray && (hi_inf || hi > 1)) {
            hi = 1;
            hi_inf = false;
        }
        if (hi_inf) {
            pieces.push_back(Piece::ray(p.a + dp * lo, p.dir, Rational(1)));
            return;
        }
        if (lo > hi)
            return;
        Vec2 u = p.a + dp * lo;
        Vec2 v = p.a + dp * hi;
        if (u == v)
            points.push_back(u);
        else
            pieces.push_back(Piece::segment(u, v, Rational(1)));
    };

    for (const auto& pe : pieces_of(a)) {
        for (const auto& qe : pieces_of(b)) {
            Vec2 dp = piece_dirvec(pe), dq = piece_dirvec(qe);
            Rational den = cross(dp, dq);
            if (den != 0) {
                Rational ti = cross(qe.a - pe.a, dq) / den;
                Rational tj = cross(qe.a - pe.a, dp) / den;
                if (param_in_range(pe, ti) && param_in_range(qe, tj))
                    points.push_back(pe.a + dp * ti);
            } else if (cross(qe.a - pe.a, dp) == 0) {
                clip_overlap(pe, qe);
            }
        }
    }
    // vertices of either side that lie on the other's support (covers
    // isolated vertices of iterated intersections)
    for (const auto& v : a.vertices)
        if (support_contains(b, v))
            points.push_back(v);
    for (const auto& v : b.vertices)
        if (support_contains(a, v))
            points.push_back(v);

    if (pieces.empty() && points.empty())
        return {};
    PlanarComplex out = assemble(std::move(pieces), points, true);
    for (auto& e : out.edges)
        e.w.lambda = 1;  // unweighted support
    return out;
}

PlanarComplex common_cells(const PlanarComplex& a, const PlanarComplex& b)
{
    // overlap every pair of collinear edges, at the smaller weight; the
    // per-pair clipping keeps weight changes along a line separate
    std::vector<Piece> pieces;
    auto pa = pieces_of(a), pb = pieces_of(b);
    for (const auto& p : pa) {
        for (const auto& q : pb) {
            Vec2 dp = piece_dirvec(p), dq = piece_dirvec(q);
            if (cross(dp, dq) != 0 || cross(q.a - p.a, dp) != 0)
                continue;
            Rational lam = std::min(p.wlam, q.wlam);
            Rational lo(0), hi(0);
            bool hi_inf = false;
            if (q.is_ray) {
                Rational t0 = param_of(p, q.a);
                if (dot(dp, q.dir) > 0) {
                    lo = t0;
                    hi_inf = true;
                } else {
                    hi = t0;
                }
            } else {
                Rational ta = param_of(p, q.a), tb = param_of(p, q.b);
                lo = std::min(ta, tb);
                hi = std::max(ta, tb);
            }
            if (lo < 0)
                lo = 0;
            if (!p.is_ray && (hi_inf || hi > 1)) {
                hi = 1;
                hi_inf = false;
            }
            if (hi_inf) {
                pieces.push_back(Piece::ray(p.a + dp * lo, p.dir, lam));
            } else if (lo < hi) {
                pieces.push_back(Piece::segment(p.a + dp * lo, p.a + dp * hi, lam));
            }
        }
    }
    if (pieces.empty())
        return {};
    return assemble(std::move(pieces));
}

bool dominates(const PlanarComplex& y, const PlanarComplex& x)
{
    auto py = pieces_of(y);
    for (const auto& p : pieces_of(x)) {
        // intervals of p's parameter covered by y-cells of weight >= p's
        Vec2 dp = piece_dirvec(p);
        struct Iv {
            Rational lo;
            Rational hi;
            bool hi_inf;
        };
        std::vector<Iv> ivs;
        for (const auto& q : py) {
            if (q.wlam < p.wlam)
                continue;
            Vec2 dq = piece_dirvec(q);
            if (cross(dp, dq) != 0 || cross(q.a - p.a, dp) != 0)
                continue;
            Iv iv{Rational(0), Rational(0), false};
            if (q.is_ray) {
                Rational t0 = param_of(p, q.a);
                if (dot(dp, q.dir) > 0) {
                    iv.lo = t0;
                    iv.hi_inf = true;
                } else {
                    iv.hi = t0;
                }
            } else {
                Rational ta = param_of(p, q.a), tb = param_of(p, q.b);
                iv.lo = std::min(ta, tb);
                iv.hi = std::max(ta, tb);
            }
            if (iv.lo < 0)
                iv.lo = 0;
            if (!p.is_ray && (iv.hi_inf || iv.hi > 1)) {
                iv.hi = 1;
                iv.hi_inf = false;
            }
            if (iv.hi_inf || iv.lo <= iv.hi)
                ivs.push_back(std::move(iv));
        }
        // sweep: the qualifying intervals must cover [0,1] resp. [0,inf)
        std::sort(ivs.begin(), ivs.end(), [](const Iv& a, const Iv& b) { return a.lo < b.lo; });
        Rational reach(0);
        bool reach_inf = false;
        for (const auto& iv : ivs) {
            if (iv.lo > reach)
                break;
            if (iv.hi_inf) {
                reach_inf = true;
                break;
            }
            reach = std::max(reach, iv.hi);
        }
        if (p.is_ray ? !reach_inf : (!reach_inf && reach < 1))
            return false;
    }
    return true;
}

namespace {

// Face walk over the clipped planar graph. Faces are traced with the
// interior on the left; bounded faces come out counterclockwise, so the
// number of regions is the number of positive-area cycles.
size_t count_positive_faces(const std::vector<Vec2>& verts,
                            const std::vector<std::pair<size_t, size_t>>& edges)
{
    size_t m = edges.size();
    std::vector<std::vector<size_t>> ring(verts.size());  // outgoing half-edges
    auto tail = [&](size_t h) { return h % 2 == 0 ? edges[h / 2].first : edges[h / 2].second; };
    auto head = [&](size_t h) { return h % 2 == 0 ? edges[h / 2].second : edges[h / 2].first; };
    for (size_t h = 0; h < 2 * m; ++h)
        ring[tail(h)].push_back(h);
    for (auto& r : ring) {
        std::sort(r.begin(), r.end(), [&](size_t h1, size_t h2) {
            Vec2 d1 = verts[head(h1)] - verts[tail(h1)];
            Vec2 d2 = verts[head(h2)] - verts[tail(h2)];
            return angle_less(d1, d2);
        });
    }
    std::vector<size_t> pos_in_ring(2 * m);
    for (const auto& r : ring)
        for (size_t i = 0; i < r.size(); ++i)
            pos_in_ring[r[i]] = i;

    std::vector<bool> used(2 * m, false);
    size_t positive = 0;
    for (size_t h0 = 0; h0 < 2 * m; ++h0) {
        if (used[h0])
            continue;
        Rational area2 = 0;
        size_t h = h0;
        do {
            used[h] = true;
            area2 += cross(verts[tail(h)], verts[head(h)]);
            size_t twin = h ^ 1;
            const auto& r = ring[head(h)];
            size_t i = pos_in_ring[twin];
            h = r[(i + r.size() - 1) % r.size()];
        } while (h != h0);
        if (area2 > 0)
            ++positive;
    }
    return positive;
}

}  // namespace

size_t region_count_oracle(const PlanarComplex& x)
{
    if (x.edges.empty())
        return 1;

    Rational xmin = x.vertices[0].x, xmax = xmin, ymin = x.vertices[0].y, ymax = ymin;
    for (const auto& v : x.vertices) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    xmin -= 1;
    ymin -= 1;
    xmax += 1;
    ymax += 1;

    std::map<Vec2, size_t> vid;
    std::vector<Vec2> verts;
    auto id_of = [&](const Vec2& p) {
        auto [it, fresh] = vid.emplace(p, verts.size());
        if (fresh)
            verts.push_back(p);
        return it->second;
    };
    std::vector<std::pair<size_t, size_t>> edges;
    std::vector<Vec2> boundary_pts{{xmin, ymin}, {xmax, ymin}, {xmax, ymax}, {xmin, ymax}};

    for (const auto& e : x.edges) {
        const Vec2& a = x.vertices[e.a];
        if (e.kind == PCEdge::Segment) {
            edges.emplace_back(id_of(a), id_of(x.vertices[e.b]));
        } else {
            // exit parameter against the box walls
            std::optional<Rational> t;
            auto upd = [&](const Rational& cand) {
                if (!t || cand < *t)
                    t = cand;
            };
            if (e.dir.x > 0)
                upd((xmax - a.x) / e.dir.x);
            if (e.dir.x < 0)
                upd((xmin - a.x) / e.dir.x);
            if (e.dir.y > 0)
                upd((ymax - a.y) / e.dir.y);
            if (e.dir.y < 0)
                upd((ymin - a.y) / e.dir.y);
            Vec2 exit = a + e.dir * *t;
            boundary_pts.push_back(exit);
            edges.emplace_back(id_of(a), id_of(exit));
        }
    }

    // boundary cycle split at exit points, ordered along the perimeter
    std::sort(boundary_pts.begin(), boundary_pts.end());
    boundary_pts.erase(std::unique(boundary_pts.begin(), boundary_pts.end()),
                       boundary_pts.end());
    auto perim_key = [&](const Vec2& p) -> std::pair<int, Rational> {
        if (p.y == ymin && p.x != xmax)
            return {0, p.x - xmin};
        if (p.x == xmax && p.y != ymax)
            return {1, p.y - ymin};
        if (p.y == ymax && p.x != xmin)
            return {2, xmax - p.x};
        return {3, ymax - p.y};
    };
    std::sort(boundary_pts.begin(), boundary_pts.end(), [&](const Vec2& a, const Vec2& b) {
        return perim_key(a) < perim_key(b);
    });
    for (size_t i = 0; i < boundary_pts.size(); ++i) {
        size_t j = (i + 1) % boundary_pts.size();
        edges.emplace_back(id_of(boundary_pts[i]), id_of(boundary_pts[j]));
    }

    return count_positive_faces(verts, edges);
}

}  // namespace tropmin
