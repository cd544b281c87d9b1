#include "tropmin/parser.hpp"
#include "tropmin/planar.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace tropmin;

namespace {

Vec2 v2(int x, int y) { return {Rational(x), Rational(y)}; }

// the standard tropical line and a second 3-region curve crossing it in
// three points (same arrangement as the eight-region example)
Signomial line_a() { return parse_signomial("x + y + 0", 2); }
Signomial curve_b() { return parse_signomial("2*x^2*y + -4*x*y^3 + 0", 2); }

std::set<Vec2> ray_dirs(const PlanarComplex& x)
{
    std::set<Vec2> out;
    for (const auto& e : x.edges)
        if (e.kind == PCEdge::Ray)
            out.insert(e.dir);
    return out;
}

Signomial random_signomial(std::mt19937_64& rng, size_t max_monomials)
{
    std::vector<Monomial> ms;
    size_t n = 2 + rng() % (max_monomials - 1);
    for (size_t i = 0; i < n; ++i)
        ms.push_back({Rational(int(rng() % 13) - 6, 1 + int(rng() % 2)),
                      {Rational(int(rng() % 5) - 2), Rational(int(rng() % 5) - 2)}});
    return Signomial(2, std::move(ms));
}

}  // namespace

TEST_CASE("tropical curve: the tripod of max(x, y, 0)")
{
    PlanarComplex t = tropical_curve(line_a());
    REQUIRE(t.vertices.size() == 1);
    CHECK(t.vertices[0] == v2(0, 0));
    REQUIRE(t.edges.size() == 3);
    CHECK(ray_dirs(t) == std::set<Vec2>{v2(1, 1), v2(-1, 0), v2(0, -1)});
    for (const auto& e : t.edges)
        CHECK(e.w.lambda == 1);
    CHECK(is_balanced(t));
}

TEST_CASE("tropical curve: single monomial and a single line")
{
    CHECK(tropical_curve(parse_signomial("5*x*y^2", 2)).empty());

    PlanarComplex l = tropical_curve(parse_signomial("x + y", 2));
    REQUIRE(l.edges.size() == 2);
    CHECK(ray_dirs(l) == std::set<Vec2>{v2(1, 1), v2(-1, -1)});
    // gradient change between x and y is (1,-1); rotated it spans (1,1)
    for (const auto& e : l.edges) {
        CHECK(e.w.prim == v2(1, 1));
        CHECK(e.w.lambda == 1);
    }
}

TEST_CASE("tropical curve: weights scale with lattice length")
{
    // (x+y)^2 has gradient change twice the primitive step
    PlanarComplex l = tropical_curve(parse_signomial("x^2 + x*y + y^2", 2));
    REQUIRE(l.edges.size() == 2);
    for (const auto& e : l.edges)
        CHECK(e.w.lambda == 2);
}

TEST_CASE("overlay: identity, two curves, coincident rays")
{
    PlanarComplex a = tropical_curve(line_a());
    CHECK(overlay(a, PlanarComplex{}) == a);

    PlanarComplex b = tropical_curve(curve_b());
    PlanarComplex both = overlay(a, b);
    CHECK(both.vertices.size() == 5);  // two curve vertices + three crossings
    CHECK(both.edges.size() == 12);
    CHECK(is_balanced(both));
    std::set<Vec2> verts(both.vertices.begin(), both.vertices.end());
    CHECK(verts.count(v2(0, 0)) == 1);
    CHECK(verts.count(v2(-2, 2)) == 1);
    CHECK(verts.count(v2(-1, 0)) == 1);
    CHECK(verts.count(v2(0, -2)) == 1);
    CHECK(verts.count(v2(6, 6)) == 1);

    PlanarComplex doubled = overlay(a, tropical_curve(parse_signomial("x + y", 2)));
    bool found = false;
    for (const auto& e : doubled.edges)
        if (e.kind == PCEdge::Ray && e.dir == v2(1, 1)) {
            CHECK(e.w.vec() == v2(2, 2));
            found = true;
        }
    CHECK(found);
}

TEST_CASE("corner locus: the example function, full cancellation, partial cancellation")
{
    SignedComplex l1 = corner_locus(parse_rational_rep("(x + 0)*(y + 0) / (x + y + 0)", 2));
    CHECK(ray_dirs(l1.pos) == std::set<Vec2>{v2(1, 0), v2(0, 1)});
    CHECK(ray_dirs(l1.neg) == std::set<Vec2>{v2(1, 1)});

    SignedComplex cancel = corner_locus(parse_rational_rep("(x + y + 0) / (x + y + 0)", 2));
    CHECK(cancel.pos.empty());
    CHECK(cancel.neg.empty());

    SignedComplex part = corner_locus(parse_rational_rep("(x + y + 0) / (x + y)", 2));
    CHECK(ray_dirs(part.pos) == std::set<Vec2>{v2(-1, 0), v2(0, -1)});
    REQUIRE(part.neg.edges.size() == 1);
    CHECK(part.neg.edges[0].dir == v2(-1, -1));
    CHECK(part.neg.edges[0].w.vec() == v2(1, 1));  // canonical line primitive
}

TEST_CASE("euler characteristic")
{
    PlanarComplex point;
    point.vertices.push_back(v2(3, 3));
    CHECK(euler_characteristic(point) == 1);
    CHECK(euler_characteristic(tropical_curve(line_a())) == -2);
    CHECK(euler_characteristic(PlanarComplex{}) == 0);
}

TEST_CASE("region oracle")
{
    CHECK(region_count_oracle(PlanarComplex{}) == 1);
    CHECK(region_count_oracle(tropical_curve(line_a())) == 3);
    CHECK(region_count_oracle(overlay(tropical_curve(line_a()), tropical_curve(curve_b()))) == 8);
    // a bounded component: the witness triangle complex alone
    PlanarComplex tri = assemble({Piece::segment(v2(0, 0), v2(1, -1), Rational(1)),
                                  Piece::segment(v2(1, -1), v2(2, 0), Rational(1)),
                                  Piece::segment(v2(2, 0), v2(0, 0), Rational(1))});
    CHECK(region_count_oracle(tri) == 2);
    // an isolated segment separates nothing
    PlanarComplex seg = assemble({Piece::segment(v2(0, 0), v2(1, 0), Rational(1))});
    CHECK(region_count_oracle(seg) == 1);
}

TEST_CASE("balance checks")
{
    CHECK(is_balanced(tropical_curve(parse_signomial("1*x^2*y + -3*y^-1 + 2*x^-1 + 0", 2))));
    CHECK(!is_balanced_fan(WeightedFan(v2(0, 0), {{v2(1, 0), 1}, {v2(0, 1), 1}})));
    CHECK(is_balanced_fan(
        WeightedFan(v2(0, 0), {{v2(1, 0), 1}, {v2(0, 1), 1}, {v2(-1, -1), 1}})));
}

TEST_CASE("recession fan")
{
    WeightedFan f(v2(2, 3), {{v2(1, 0), 2}, {v2(0, 1), 1}});
    WeightedFan r = recession_fan(complex_of_fan(f));
    CHECK(r.base == v2(0, 0));
    CHECK(r.rays == f.rays);

    PlanarComplex seg = assemble({Piece::segment(v2(0, 0), v2(1, 0), Rational(1))});
    CHECK(recession_fan(seg).rays.empty());

    // two parallel-shifted tropical lines: three doubled directions
    PlanarComplex two = overlay(tropical_curve(line_a()),
                                tropical_curve(parse_signomial("-3*x + -1*y + 0", 2)));
    WeightedFan rec = recession_fan(two);
    REQUIRE(rec.rays.size() == 3);
    for (const auto& ray : rec.rays)
        CHECK(ray.lambda == 2);
}

TEST_CASE("intersection complex")
{
    PlanarComplex a = tropical_curve(line_a());
    PlanarComplex b = tropical_curve(curve_b());
    PlanarComplex inter = intersection_complex(a, b);
    CHECK(inter.vertices.size() == 3);
    CHECK(inter.edges.empty());
    CHECK(euler_characteristic(inter) == 3);

    PlanarComplex far = tropical_curve(parse_signomial("x + -100", 2));
    PlanarComplex segs = assemble({Piece::segment(v2(1, 1), v2(2, 1), Rational(1))});
    CHECK(intersection_complex(far, segs).empty());

    CHECK(intersection_complex(a, a) == a);
}

TEST_CASE("common cells and domination")
{
    PlanarComplex a = tropical_curve(parse_signomial("x^2 + x*y + y^2", 2));  // weight 2 line
    PlanarComplex b = tropical_curve(parse_signomial("x + y", 2));            // weight 1 line
    PlanarComplex shared = common_cells(a, b);
    REQUIRE(shared.edges.size() == 2);
    for (const auto& e : shared.edges)
        CHECK(e.w.lambda == 1);  // min of the two weights
    CHECK(dominates(a, shared));
    CHECK(dominates(b, shared));
    CHECK(dominates(a, b));
    CHECK(!dominates(b, a));
}

TEST_CASE("euler-poincare and inclusion-exclusion on random balanced complexes")
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        PlanarComplex a = tropical_curve(random_signomial(rng, 5));
        PlanarComplex b = tropical_curve(random_signomial(rng, 5));
        PlanarComplex x = overlay(a, b);
        CHECK(is_balanced(x));
        CHECK(euler_characteristic(x) + static_cast<long long>(region_count_oracle(x)) == 1);
        CHECK(euler_characteristic(x) ==
              euler_characteristic(a) + euler_characteristic(b) -
                  euler_characteristic(intersection_complex(a, b)));
    }
}

TEST_CASE("duality: regions of the curve count the monomials")
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        Signomial s = random_signomial(rng, 6);
        size_t len = mlen(s);
        CHECK(region_count_oracle(tropical_curve(s)) == len);
        CHECK(regular_subdivision(s).vertices.size() == len);
    }
}
