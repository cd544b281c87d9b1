#include "tropmin/fm.hpp"
#include "tropmin/polytope.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace tropmin;

namespace {

Point pt(std::initializer_list<int> cs)
{
    Point p;
    for (int c : cs)
        p.push_back(Rational(c));
    return p;
}

void scale_plane(QVec& n, Rational& off)
{
    Integer l(1);
    for (const auto& c : n)
        l = boost::multiprecision::lcm(l, denom(c));
    l = boost::multiprecision::lcm(l, denom(off));
    Integer g(0);
    auto acc = [&](const Rational& c) {
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(numer(c) * (l / denom(c))));
    };
    for (const auto& c : n)
        acc(c);
    acc(off);
    if (g == 0)
        g = 1;
    Rational f = Rational(l) / Rational(g);
    for (auto& c : n)
        c *= f;
    off *= f;
}

// independent oracle: enumerate supporting planes through point triples
std::set<std::pair<QVec, Rational>> brute_facets_3d(const std::vector<Point>& pts)
{
    std::set<std::pair<QVec, Rational>> planes;
    size_t n = pts.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                QVec u = qvec_sub(pts[j], pts[i]);
                QVec v = qvec_sub(pts[k], pts[i]);
                QVec nrm{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                         u[0] * v[1] - u[1] * v[0]};
                if (qvec_is_zero(nrm))
                    continue;
                Rational off = qvec_dot(nrm, pts[i]);
                bool above = false, below = false;
                for (const auto& p : pts) {
                    int s = sign(qvec_dot(nrm, p) - off);
                    above = above || s > 0;
                    below = below || s < 0;
                }
                if (above && below)
                    continue;
                if (above) {
                    for (auto& c : nrm)
                        c = -c;
                    off = -off;
                }
                scale_plane(nrm, off);
                planes.insert({nrm, off});
            }
    return planes;
}

bool inside_all_facets(const Polytope& p, const Point& x)
{
    for (const auto& f : p.facets)
        if (qvec_dot(f.normal, x) > f.offset)
            return false;
    return true;
}

}  // namespace

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-2/6") == Rational(-1, 3));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-7").str() == "-7");
    CHECK_THROWS_AS(parse_rational("1/"), ParseError);
    CHECK_THROWS_AS(parse_rational("a"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("primitive vectors and angular order")
{
    auto ps = primitive_line(Vec2(Rational(-2), Rational(-2)));
    CHECK(ps.prim == Vec2(Rational(1), Rational(1)));
    CHECK(ps.lambda == 2);
    CHECK(primitive_oriented(Vec2(Rational(2, 3), Rational(-4, 3))) ==
          Vec2(Rational(1), Rational(-2)));
    // counterclockwise from the positive x-axis
    std::vector<Vec2> dirs{{Rational(1), Rational(0)},
                           {Rational(1), Rational(1)},
                           {Rational(0), Rational(1)},
                           {Rational(-1), Rational(0)},
                           {Rational(0), Rational(-1)},
                           {Rational(1), Rational(-1)}};
    for (size_t i = 0; i + 1 < dirs.size(); ++i)
        CHECK(angle_less(dirs[i], dirs[i + 1]));
}

TEST_CASE("hull: square with center point")
{
    Polytope p = convex_hull(
        {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1}), {Rational(1, 2), Rational(1, 2)}}, 2);
    CHECK(p.affine_dim == 2);
    CHECK(p.vertices.size() == 4);
    CHECK(p.facets.size() == 4);
    for (const auto& f : p.facets)
        CHECK(f.vertex_ids.size() == 2);
}

TEST_CASE("hull: single point and segment")
{
    Polytope p = convex_hull({pt({3, 4}), pt({3, 4})}, 2);
    CHECK(p.affine_dim == 0);
    CHECK(p.vertices.size() == 1);

    Polytope s = convex_hull({pt({0, 0, 0}), pt({1, 1, 1}), pt({2, 2, 2})}, 3);
    CHECK(s.affine_dim == 1);
    CHECK(s.vertices.size() == 2);
    CHECK(s.vertices[1] == pt({2, 2, 2}));
}

TEST_CASE("hull: unit cube against the plane-enumeration oracle")
{
    std::vector<Point> cube;
    for (int x = 0; x <= 1; ++x)
        for (int y = 0; y <= 1; ++y)
            for (int z = 0; z <= 1; ++z)
                cube.push_back(pt({x, y, z}));
    Polytope p = convex_hull(cube, 3);
    CHECK(p.vertices.size() == 8);
    CHECK(p.facets.size() == 6);
    auto oracle = brute_facets_3d(cube);
    CHECK(oracle.size() == 6);
    for (const auto& f : p.facets)
        CHECK(oracle.count({f.normal, f.offset}) == 1);
}

TEST_CASE("hull: random 3d point sets agree with the oracle")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Point> pts;
        size_t n = 5 + rng() % 8;
        for (size_t i = 0; i < n; ++i)
            pts.push_back(pt({int(rng() % 7) - 3, int(rng() % 7) - 3, int(rng() % 7) - 3}));
        Polytope p = convex_hull(pts, 3);
        if (!p.full_dimensional())
            continue;
        auto oracle = brute_facets_3d(pts);
        REQUIRE(p.facets.size() == oracle.size());
        for (const auto& f : p.facets) {
            CHECK(oracle.count({f.normal, f.offset}) == 1);
            CHECK(f.vertex_ids.size() >= 3);
        }
        // every input point inside, every vertex a member of the input
        for (const auto& q : pts)
            CHECK(inside_all_facets(p, q));
        std::set<Point> input(pts.begin(), pts.end());
        for (const auto& v : p.vertices)
            CHECK(input.count(v) == 1);
        // vertices lie on their incident facets exactly, strictly inside others
        for (size_t fi = 0; fi < p.facets.size(); ++fi) {
            std::set<size_t> inc(p.facets[fi].vertex_ids.begin(),
                                 p.facets[fi].vertex_ids.end());
            for (size_t vi = 0; vi < p.vertices.size(); ++vi) {
                Rational s = qvec_dot(p.facets[fi].normal, p.vertices[vi]);
                if (inc.count(vi))
                    CHECK(s == p.facets[fi].offset);
                else
                    CHECK(s < p.facets[fi].offset);
            }
        }
    }
}

TEST_CASE("hull: 4-dimensional cross polytope")
{
    std::vector<Point> pts;
    for (int axis = 0; axis < 4; ++axis)
        for (int s : {-1, 1}) {
            Point p(4, Rational(0));
            p[axis] = s;
            pts.push_back(p);
        }
    pts.push_back(pt({0, 0, 0, 0}));
    Polytope p = convex_hull(pts, 4);
    CHECK(p.vertices.size() == 8);
    CHECK(p.facets.size() == 16);
}

TEST_CASE("minkowski sum: generic triangles make a hexagon")
{
    Polytope t1 = convex_hull({pt({0, 0}), pt({1, 0}), pt({0, 1})}, 2);
    Polytope t2 = convex_hull({pt({0, 0}), pt({2, 1}), pt({1, 3})}, 2);
    Polytope sum = minkowski_sum(t1, t2);
    CHECK(sum.vertices.size() == 6);
    // oracle: planar chain over the 9 pairwise sums
    std::vector<Vec2> sums;
    for (const auto& a : t1.vertices)
        for (const auto& b : t2.vertices)
            sums.push_back({a[0] + b[0], a[1] + b[1]});
    CHECK(hull2d_ccw(sums).size() == 6);
}

TEST_CASE("minkowski sum: shared edge normals give a 4-gon")
{
    Polytope t1 = convex_hull({pt({0, 0}), pt({1, 0}), pt({0, 1})}, 2);
    Polytope t2 = convex_hull({pt({0, 0}), pt({2, 0}), pt({0, 1})}, 2);
    CHECK(minkowski_sum(t1, t2).vertices.size() == 4);
}

TEST_CASE("minkowski sum: translating by a point")
{
    Polytope t1 = convex_hull({pt({0, 0}), pt({1, 0}), pt({0, 1})}, 2);
    Polytope shift = convex_hull({pt({5, -2})}, 2);
    Polytope sum = minkowski_sum(t1, shift);
    REQUIRE(sum.vertices.size() == 3);
    CHECK(sum.vertices[0] == pt({5, -1}));

    Polytope q = convex_hull({pt({0, 0, 0}), pt({1, 0, 0})}, 3);
    CHECK_THROWS_AS(minkowski_sum(t1, q), DimensionMismatch);
}

TEST_CASE("minkowski sum is commutative and associative on vertex sets")
{
    std::mt19937_64 rng(11);
    auto rnd = [&](size_t n) {
        std::vector<Point> pts;
        for (size_t i = 0; i < n; ++i)
            pts.push_back(pt({int(rng() % 9) - 4, int(rng() % 9) - 4}));
        return convex_hull(pts, 2);
    };
    for (int trial = 0; trial < 10; ++trial) {
        Polytope a = rnd(4), b = rnd(4), c = rnd(3);
        CHECK(minkowski_sum(a, b).vertices == minkowski_sum(b, a).vertices);
        CHECK(minkowski_sum(minkowski_sum(a, b), c).vertices ==
              minkowski_sum(a, minkowski_sum(b, c)).vertices);
    }
}

namespace {

// grid oracle: v is upper iff some functional t - a*x over a modest grid
// of rational slopes picks v uniquely
std::set<Point> upper_oracle_2d(const std::vector<Point>& pts)
{
    std::set<Point> out;
    for (int num = -16; num <= 16; ++num) {
        Rational a(num, 2);
        size_t best = 0;
        bool unique = true;
        for (size_t i = 1; i < pts.size(); ++i) {
            Rational vi = pts[i][1] - a * pts[i][0];
            Rational vb = pts[best][1] - a * pts[best][0];
            if (vi > vb) {
                best = i;
                unique = true;
            } else if (vi == vb) {
                unique = false;
            }
        }
        if (unique)
            out.insert(pts[best]);
    }
    return out;
}

}  // namespace

TEST_CASE("upper vertices of lifted 2d point sets")
{
    std::vector<Point> a{pt({0, 0}), pt({1, 1}), pt({2, 0})};
    auto ua = upper_vertices(convex_hull(a, 2));
    CHECK(ua.size() == 3);
    CHECK(upper_oracle_2d(a) == std::set<Point>(ua.begin(), ua.end()));

    std::vector<Point> b{pt({0, 0}), pt({1, -1}), pt({2, 0})};
    auto ub = upper_vertices(convex_hull(b, 2));
    CHECK(ub == std::vector<Point>{pt({0, 0}), pt({2, 0})});
    CHECK(upper_oracle_2d(b) == std::set<Point>(ub.begin(), ub.end()));

    auto up = upper_vertices(convex_hull({pt({5, 7})}, 2));
    CHECK(up == std::vector<Point>{pt({5, 7})});
}

TEST_CASE("upper vertices: degenerate hulls")
{
    // all points on a non-vertical plane: every vertex is upper
    std::vector<Point> flat{pt({0, 0, 0}), pt({1, 0, 1}), pt({0, 1, 2}), pt({1, 1, 3})};
    Polytope p = convex_hull(flat, 3);
    CHECK(p.affine_dim == 2);
    CHECK(upper_vertices(p).size() == 4);

    // vertical plane (collinear bases): the middle point hangs below
    std::vector<Point> vert{pt({0, 0, 0}), pt({1, 0, -1}), pt({2, 0, 0})};
    Polytope q = convex_hull(vert, 3);
    CHECK(q.affine_dim == 2);
    CHECK(upper_vertices(q).size() == 2);
}

TEST_CASE("strict feasibility: small systems")
{
    // x < 1, -x < -2 infeasible; x < 3, -x < -2 feasible
    CHECK(!strict_system_feasible({{{Rational(1)}, Rational(1)},
                                   {{Rational(-1)}, Rational(-2)}}, 1));
    CHECK(strict_system_feasible({{{Rational(1)}, Rational(3)},
                                  {{Rational(-1)}, Rational(-2)}}, 1));
    // empty system over two variables
    CHECK(strict_system_feasible({}, 2));
    // 0 < -1 infeasible even with no variables left
    CHECK(!strict_system_feasible({{{}, Rational(-1)}}, 0));
}
