#include "tropmin/parser.hpp"
#include "tropmin/signomial.hpp"

#include <doctest.h>

#include <random>

using namespace tropmin;

namespace {

const char* kFiveTermG = "1*x*y^-1 + 1*y^-2 + 1*x^-1*y^-1 + 1 + y";
const char* kThreeFactorH = "(x^-1*y^-1 + 0)*(-2*x*y^-1 + 0)*(y + 0)";

Point at(int x, int y) { return {Rational(x), Rational(y)}; }

// deterministic rational grid, with extra points near the tie loci of s
std::vector<Point> eval_grid(const Signomial& s)
{
    std::vector<Point> grid;
    for (int i = -16; i <= 16; ++i)
        for (int j = -16; j <= 16; ++j)
            grid.push_back({Rational(i, 2), Rational(j, 2)});
    const auto& ms = s.monomials();
    for (size_t i = 0; i < ms.size(); ++i)
        for (size_t j = i + 1; j < ms.size(); ++j) {
            // a point on the tie line of monomials i and j, plus nudges
            QVec d = qvec_sub(ms[i].exps, ms[j].exps);
            Rational dd = qvec_dot(d, d);
            if (dd == 0)
                continue;
            Rational t = (ms[j].coeff - ms[i].coeff) / dd;
            Point p{d[0] * t, d[1] * t};
            grid.push_back(p);
            grid.push_back({p[0] + Rational(1, 97), p[1] - Rational(1, 101)});
            grid.push_back({p[0] - Rational(1, 97), p[1] + Rational(1, 101)});
        }
    return grid;
}

}  // namespace

TEST_CASE("evaluation")
{
    Signomial s = parse_signomial("x + 0", 1);
    CHECK(evaluate(s, {Rational(3)}) == 3);
    CHECK(evaluate(s, {Rational(-2)}) == 0);
    CHECK_THROWS_AS(evaluate(s, {Rational(1), Rational(2)}), DimensionMismatch);

    Signomial g = parse_signomial(kFiveTermG, 2);
    CHECK(evaluate(g, at(0, 0)) == 1);
}

TEST_CASE("rational evaluation: the two representations of the example function")
{
    RationalRep r1 = parse_rational_rep("(x + 0)*(y + 0) / (x + y + 0)", 2);
    RationalRep r2 = parse_rational_rep("(x*y + x + y) / (x + y)", 2);
    CHECK(evaluate_rational(r1, at(2, 1)) == 1);
    CHECK(evaluate_rational(r2, at(2, 1)) == 1);
    CHECK(evaluate_rational(r1, at(-1, -1)) == 0);
}

TEST_CASE("expand")
{
    Factorization f = parse_factorization("(x + 0)*(y + 0)", 2);
    Signomial e = expand(f);
    CHECK(e == parse_signomial("x*y + x + y + 0", 2));

    Factorization single = parse_factorization("x + y + 0", 2);
    CHECK(expand(single) == single.factors[0]);

    Signomial h = expand(parse_factorization(kThreeFactorH, 2));
    CHECK(h.size() == 8);
}

TEST_CASE("reduce")
{
    // middle lifted point strictly below the upper hull
    Signomial a = parse_signomial("0 + -1*x + x^2", 1);
    CHECK(reduce(a) == parse_signomial("0 + x^2", 1));
    for (int k = -20; k <= 20; ++k)
        CHECK(evaluate(a, {Rational(k, 3)}) == evaluate(reduce(a), {Rational(k, 3)}));

    // duplicate exponents merge on construction
    Signomial b(1, {{Rational(0), {Rational(1)}}, {Rational(0), {Rational(1)}}});
    CHECK(b.size() == 1);

    // middle point on the chord is removable
    Signomial c = parse_signomial("x^2 + x + 0", 1);
    CHECK(reduce(c) == parse_signomial("x^2 + 0", 1));
}

TEST_CASE("mlen")
{
    CHECK(mlen(parse_signomial(kFiveTermG, 2)) == 5);
    CHECK(mlen(parse_signomial("7", 2)) == 1);
    CHECK(mlen(expand(parse_factorization("(x + 0)*(y + 0)", 2))) == 4);
}

TEST_CASE("flen")
{
    CHECK(flen(parse_factorization("(x + y)*(x + 0)*(y + 0)", 2)) == 4);
    CHECK(flen(parse_factorization("(x + y + 0)*(x*y + x + y)", 2)) == 5);
    Factorization single = parse_factorization(kFiveTermG, 2);
    CHECK(flen(single) == mlen(single.factors[0]));
}

TEST_CASE("newton polytopes")
{
    Polytope tri = newton_polytope(parse_signomial("x + y + 0", 2));
    CHECK(tri.vertices.size() == 3);
    CHECK(tri.affine_dim == 2);

    Polytope pt = newton_polytope(parse_signomial("3*x^2*y", 2));
    CHECK(pt.vertices.size() == 1);
    CHECK(pt.affine_dim == 0);

    // newton polytope of a product is the minkowski sum of the factors'
    Factorization f = parse_factorization("(x + y + 0)*(x*y + 2*x + y^2)", 2);
    Polytope lhs = newton_polytope(expand(f));
    Polytope rhs = minkowski_sum(newton_polytope(f.factors[0]), newton_polytope(f.factors[1]));
    CHECK(lhs.vertices == rhs.vertices);
}

TEST_CASE("lifted newton polytope carries coefficients as heights")
{
    Signomial s = parse_signomial("x + y + 0", 2);
    Polytope lift = lifted_newton(s);
    CHECK(lift.dim == 3);
    CHECK(lift.vertices.size() == 3);
    for (const auto& v : lift.vertices)
        CHECK(v[2] == 0);
}

TEST_CASE("regular subdivision: trivial, zonotopal, and five-vertex cases")
{
    Subdivision tri = regular_subdivision(parse_signomial("x + y + 0", 2));
    CHECK(tri.cells.size() == 1);
    CHECK(tri.vertices.size() == 3);

    // the three-factor binomial product tiles its hexagon by three
    // parallelograms; one interior vertex joins the boundary six
    Subdivision zono = regular_subdivision(expand(parse_factorization(kThreeFactorH, 2)));
    CHECK(zono.cells.size() == 3);
    for (const auto& cell : zono.cells)
        CHECK(cell.polygon.size() == 4);
    CHECK(zono.vertices.size() == 7);

    Subdivision five = regular_subdivision(parse_signomial(kFiveTermG, 2));
    CHECK(five.vertices.size() == 5);
}

TEST_CASE("regular subdivision: degenerate newton polytopes")
{
    // collinear exponents: 1-d cells along the segment
    Subdivision seg = regular_subdivision(parse_signomial("x^2 + x + 0", 2));
    CHECK(seg.base.affine_dim == 1);
    CHECK(seg.vertices.size() == 2);
    CHECK(seg.cells.size() == 1);

    Subdivision seg2 = regular_subdivision(parse_signomial("x^2 + 1*x + 0", 2));
    CHECK(seg2.vertices.size() == 3);
    CHECK(seg2.cells.size() == 2);

    Subdivision point = regular_subdivision(parse_signomial("4*x*y", 2));
    CHECK(point.base.affine_dim == 0);
    CHECK(point.vertices.size() == 1);
}

TEST_CASE("reduce preserves the function on a grid with tie-locus points")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Monomial> ms;
        size_t n = 3 + rng() % 4;
        for (size_t i = 0; i < n; ++i)
            ms.push_back({Rational(int(rng() % 9) - 4, 1 + int(rng() % 2)),
                          {Rational(int(rng() % 5) - 2), Rational(int(rng() % 5) - 2)}});
        Signomial s(2, std::move(ms));
        Signomial r = reduce(s);
        CHECK(r.size() <= s.size());
        for (const auto& p : eval_grid(s))
            REQUIRE(evaluate(s, p) == evaluate(r, p));
        // reducing twice changes nothing
        CHECK(reduce(r) == r);
    }
}

TEST_CASE("mlen of products: pre-reduction bound and subdivision vertex count")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<Monomial> m1, m2;
        for (size_t i = 0; i < 3; ++i) {
            m1.push_back({Rational(int(rng() % 7) - 3),
                          {Rational(int(rng() % 5) - 2), Rational(int(rng() % 5) - 2)}});
            m2.push_back({Rational(int(rng() % 7) - 3),
                          {Rational(int(rng() % 5) - 2), Rational(int(rng() % 5) - 2)}});
        }
        Factorization f({Signomial(2, m1), Signomial(2, m2)});
        Signomial prod = expand(f);
        size_t len = mlen(prod);
        CHECK(len <= mlen(f.factors[0]) * mlen(f.factors[1]));
        CHECK(len == regular_subdivision(prod).vertices.size());
    }
}

TEST_CASE("flen is invariant under factor reordering")
{
    Factorization f = parse_factorization("(x + y + 0)*(x*y + 2*x + y^2)*(x + 1)", 2);
    Factorization g({f.factors[2], f.factors[0], f.factors[1]});
    CHECK(flen(f) == flen(g));
}

TEST_CASE("translation invariance of mlen and flen")
{
    Factorization f = parse_factorization("(x + y + 0)*(1*x*y + 2*x + y^2)", 2);
    // multiply every factor by the linear functional 3 + 2x - y
    std::vector<Signomial> shifted;
    for (const auto& g : f.factors) {
        std::vector<Monomial> ms;
        for (const auto& m : g.monomials())
            ms.push_back({m.coeff + 3, {m.exps[0] + 2, m.exps[1] - 1}});
        shifted.push_back(Signomial(2, std::move(ms)));
    }
    Factorization fs(std::move(shifted));
    CHECK(flen(f) == flen(fs));
    CHECK(mlen(expand(f)) == mlen(expand(fs)));
}
