#include "tropmin/counting.hpp"
#include "tropmin/parser.hpp"

#include <doctest.h>

#include <random>

using namespace tropmin;

namespace {

Point pt3(int x, int y, int z) { return {Rational(x), Rational(y), Rational(z)}; }

}  // namespace

TEST_CASE("binomial coefficients")
{
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(6, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(10, 5) == 252);
}

TEST_CASE("region count formula")
{
    Signomial g1 = parse_signomial("x + y + 0", 2);
    Signomial g2 = parse_signomial("2*x^2*y + -4*x*y^3 + 0", 2);
    CountReport two = region_count_formula({g1, g2}, true);
    CHECK(two.flen == 5);
    CHECK(two.mlen_formula == 8);
    CHECK(two.mlen_oracle == 8);

    CountReport single = region_count_formula({g1});
    CHECK(single.mlen_formula == 3);
    CHECK(single.terms.empty());

    // three pairwise-crossing binomial lines recover the classical count
    Signomial l1 = parse_signomial("x + 0", 2);
    Signomial l2 = parse_signomial("y + 0", 2);
    Signomial l3 = parse_signomial("x*y + 1", 2);
    CountReport three = region_count_formula({l1, l2, l3}, true);
    CHECK(three.mlen_formula == 7);
    CHECK(three.mlen_oracle == 7);
}

TEST_CASE("lower bound right-hand side")
{
    CHECK(lower_bound_rhs(2, 2, 5) == 6);
    CHECK(lower_bound_rhs(1, 2, 4) == 4);
    // m binomial lines: flen = m+1, bound matches the classical count
    for (size_t m = 2; m <= 6; ++m)
        CHECK(lower_bound_rhs(m, 2, static_cast<long long>(m) + 1) ==
              1 + static_cast<long long>(m) + binomial(m, 2));
}

TEST_CASE("lower bound check: generic and non-generic instances")
{
    Signomial g1 = parse_signomial("x + y + 0", 2);
    Signomial g2 = parse_signomial("2*x^2*y + -4*x*y^3 + 0", 2);
    BoundReport generic = check_lower_bound({g1, g2});
    CHECK(generic.generic);
    CHECK(generic.holds);
    CHECK(!generic.tight);  // three intersection points, not one

    BoundReport lines = check_lower_bound(
        {parse_signomial("x + 0", 2), parse_signomial("y + 0", 2)});
    CHECK(lines.generic);
    CHECK(lines.holds);
    CHECK(lines.tight);

    // triangles sharing two edge directions: curves share two rays
    BoundReport fourgon = check_lower_bound(
        {parse_signomial("x + y + 0", 2), parse_signomial("x^2 + y + 0", 2)});
    CHECK(!fourgon.generic);
    CHECK(!fourgon.holds);
    CHECK(fourgon.count.mlen_formula == 4);
    CHECK(fourgon.count.flen == 5);
}

TEST_CASE("minkowski bound right-hand sides")
{
    CHECK(minkowski_lower_bound_rhs({3, 3}, 2) == 6);
    CHECK(minkowski_lower_bound_rhs({2, 2, 2, 2}, 3) == 14);
    CHECK(minkowski_lower_bound_rhs({5}, 3) == 5);
}

TEST_CASE("minkowski bound checks")
{
    Polytope t1 = convex_hull({{Rational(0), Rational(0)}, {Rational(1), Rational(0)},
                               {Rational(0), Rational(1)}},
                              2);
    Polytope t2 = convex_hull({{Rational(0), Rational(0)}, {Rational(2), Rational(1)},
                               {Rational(1), Rational(3)}},
                              2);
    MinkowskiReport pair = check_minkowski_bound({t1, t2});
    CHECK(pair.sum_vertices == 6);
    CHECK(pair.rhs == 6);
    CHECK(pair.holds);
    CHECK(!pair.degenerate);

    // three generic segments in the plane: a hexagonal zonotope
    auto seg2 = [](int x, int y) {
        return convex_hull({{Rational(0), Rational(0)}, {Rational(x), Rational(y)}}, 2);
    };
    MinkowskiReport zono = check_minkowski_bound({seg2(1, 0), seg2(0, 1), seg2(1, 1)});
    CHECK(zono.sum_vertices == 6);
    CHECK(zono.zonotope_rhs == 6);
    CHECK(zono.zonotope_holds);

    // generic triangle pair in three dimensions
    Polytope u1 = convex_hull({pt3(0, 0, 0), pt3(3, 1, 0), pt3(1, 4, 1)}, 3);
    Polytope u2 = convex_hull({pt3(0, 0, 0), pt3(1, 0, 5), pt3(0, 3, 2)}, 3);
    MinkowskiReport tri3 = check_minkowski_bound({u1, u2});
    CHECK(tri3.rhs == 6);
    CHECK(tri3.sum_vertices >= 6);
    CHECK(tri3.holds);
}

TEST_CASE("linear region bound")
{
    RationalRep rep2 = parse_rational_rep("(x*y + x + y) / (x + y)", 2);
    // shared ray between the curves has euler characteristic 0
    CHECK(linear_region_bound(rep2) == 5);

    RationalRep conv = parse_rational_rep("(1*x^2*y + -3*y^-1 + 2*x^-1 + 0) / (5)", 2);
    CHECK(linear_region_bound(conv) ==
          static_cast<long long>(mlen(parse_signomial("1*x^2*y + -3*y^-1 + 2*x^-1 + 0", 2))) + 1);

    // the bound dominates the actual region count of the support
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        auto rnd = [&](size_t n) {
            std::vector<Monomial> ms;
            for (size_t i = 0; i < n; ++i)
                ms.push_back({Rational(int(rng() % 9) - 4),
                              {Rational(int(rng() % 5) - 2), Rational(int(rng() % 5) - 2)}});
            return Signomial(2, std::move(ms));
        };
        RationalRep r(Factorization({rnd(3)}), Factorization({rnd(3)}));
        SignedComplex locus = corner_locus(r);
        PlanarComplex support = overlay(locus.pos, locus.neg);
        CHECK(static_cast<long long>(region_count_oracle(support)) <= linear_region_bound(r));
    }
}

TEST_CASE("formula equals oracle for larger random families")
{
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 12; ++trial) {
        size_t m = 2 + rng() % 4;  // up to 5 signomials
        std::vector<Signomial> gs;
        for (size_t i = 0; i < m; ++i) {
            std::vector<Monomial> ms;
            size_t n = 2 + rng() % 5;  // mlen <= 6
            for (size_t j = 0; j < n; ++j)
                ms.push_back({Rational(int(rng() % 9) - 4, 1 + int(rng() % 2)),
                              {Rational(int(rng() % 5) - 2), Rational(int(rng() % 5) - 2)}});
            gs.push_back(Signomial(2, std::move(ms)));
        }
        CountReport r = region_count_formula(gs, true);
        REQUIRE(r.mlen_formula == *r.mlen_oracle);
    }
}

TEST_CASE("generic growth: correction terms push mlen past flen")
{
    std::mt19937_64 rng(71);
    int done = 0;
    while (done < 10) {
        size_t m = 2 + rng() % 2;
        std::vector<Signomial> gs;
        for (size_t i = 0; i < m; ++i) {
            std::vector<Monomial> ms;
            for (size_t j = 0; j < 3; ++j)
                ms.push_back({Rational(int(rng() % 9) - 4, 1 + int(rng() % 2)),
                              {Rational(int(rng() % 5) - 2), Rational(int(rng() % 5) - 2)}});
            gs.push_back(Signomial(2, std::move(ms)));
        }
        BoundReport r = check_lower_bound(gs);
        if (!r.generic)
            continue;
        ++done;
        CHECK(r.count.mlen_formula - r.count.flen >= binomial(m, 2));
        // subsets larger than the dimension are generically empty
        for (const auto& t : r.count.terms)
            if (t.subset.size() > 2)
                CHECK(t.chi == 0);
    }
}
