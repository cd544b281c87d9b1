#include "tropmin/counting.hpp"

#include <algorithm>
#include <cassert>

namespace tropmin {

long long binomial(size_t n, size_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (size_t i = 1; i <= k; ++i)
        r = r * static_cast<long long>(n - k + i) / static_cast<long long>(i);
    return r;
}

namespace {

// classify an intersection complex for tightness/genericity reporting
std::string classify_intersection(const PlanarComplex& x)
{
    if (x.vertices.empty())
        return "empty";
    bool has_edges = !x.edges.empty();
    if (!has_edges)
        return x.vertices.size() == 1 ? "point" : "points";
    // single affine line: one vertex, two opposite rays on one line
    if (x.vertices.size() == 1 && x.edges.size() == 2 &&
        x.edges[0].kind == PCEdge::Ray && x.edges[1].kind == PCEdge::Ray &&
        x.edges[0].dir == -x.edges[1].dir)
        return "affine-line";
    return "mixed";
}

}  // namespace

CountReport region_count_formula(const std::vector<Signomial>& gs, bool with_oracle)
{
    if (gs.empty())
        throw std::invalid_argument("region_count_formula needs at least one signomial");
    for (const auto& g : gs)
        if (g.dim() != 2)
            throw DimensionMismatch("region counting works over two variables");
    size_t m = gs.size();

    std::vector<PlanarComplex> curves;
    long long fl = 0;
    for (const auto& g : gs) {
        curves.push_back(tropical_curve(g));
        fl += static_cast<long long>(mlen(g));
    }
    fl -= static_cast<long long>(m - 1);

    CountReport rep;
    rep.flen = fl;
    rep.mlen_formula = fl;

    for (size_t mask = 1; mask < (size_t{1} << m); ++mask) {
        size_t bits = static_cast<size_t>(__builtin_popcountll(mask));
        if (bits < 2)
            continue;
        std::vector<size_t> subset;
        for (size_t i = 0; i < m; ++i)
            if (mask & (size_t{1} << i))
                subset.push_back(i);
        PlanarComplex inter = curves[subset[0]];
        for (size_t i = 1; i < subset.size() && !inter.empty(); ++i)
            inter = intersection_complex(inter, curves[subset[i]]);
        CorrectionTerm t;
        t.subset = subset;
        t.chi = euler_characteristic(inter);
        long long sgn = (bits + 2) % 2 == 0 ? 1 : -1;
        t.term = sgn * t.chi;
        rep.mlen_formula += t.term;
        rep.terms.push_back(std::move(t));
    }
    std::sort(rep.terms.begin(), rep.terms.end(),
              [](const CorrectionTerm& a, const CorrectionTerm& b) {
                  if (a.subset.size() != b.subset.size())
                      return a.subset.size() < b.subset.size();
                  return a.subset < b.subset;
              });

    if (with_oracle) {
        PlanarComplex all = curves[0];
        for (size_t i = 1; i < m; ++i)
            all = overlay(all, curves[i]);
        rep.mlen_oracle = static_cast<long long>(region_count_oracle(all));
    }
    return rep;
}

long long lower_bound_rhs(size_t m, size_t d, long long flen)
{
    long long r = flen;
    for (size_t k = 2; k <= d; ++k)
        r += binomial(m, k);
    return r;
}

BoundReport check_lower_bound(const std::vector<Signomial>& gs, bool with_oracle)
{
    BoundReport rep;
    rep.count = region_count_formula(gs, with_oracle);
    size_t m = gs.size();
    rep.rhs = lower_bound_rhs(m, 2, rep.count.flen);
    rep.holds = rep.count.mlen_formula >= rep.rhs;
    rep.tight = rep.count.mlen_formula == rep.rhs;

    std::vector<PlanarComplex> curves;
    for (const auto& g : gs)
        curves.push_back(tropical_curve(g));

    // generic: all pairwise intersections nonempty, finite and
    // transversal (no curve vertex involved), no triple intersections
    rep.generic = true;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            PlanarComplex inter = intersection_complex(curves[i], curves[j]);
            rep.pair_kinds.push_back({{i, j}, classify_intersection(inter)});
            if (!inter.edges.empty() || inter.vertices.empty()) {
                rep.generic = false;
                continue;
            }
            for (const auto& p : inter.vertices) {
                for (size_t k : {i, j})
                    for (const auto& v : curves[k].vertices)
                        if (v == p)
                            rep.generic = false;
                for (size_t k = 0; k < m; ++k)
                    if (k != i && k != j && support_contains(curves[k], p))
                        rep.generic = false;
            }
        }
    }
    return rep;
}

long long minkowski_lower_bound_rhs(const std::vector<size_t>& vertex_counts, size_t d)
{
    size_t m = vertex_counts.size();
    long long r = 0;
    for (size_t c : vertex_counts)
        r += static_cast<long long>(c);
    for (size_t k = 0; k < d; ++k)
        r += 2 * binomial(m - 1, k);
    r -= 2 * static_cast<long long>(m);
    return r;
}

MinkowskiReport check_minkowski_bound(const std::vector<Polytope>& polys)
{
    if (polys.empty())
        throw std::invalid_argument("check_minkowski_bound needs at least one polytope");
    size_t d = polys[0].dim;
    if (d != 2 && d != 3)
        throw DimensionMismatch("minkowski bounds are for dimension 2 or 3");
    for (const auto& p : polys)
        if (p.dim != d)
            throw DimensionMismatch("polytopes must share the ambient dimension");

    Polytope sum = polys[0];
    for (size_t i = 1; i < polys.size(); ++i)
        sum = minkowski_sum(sum, polys[i]);

    MinkowskiReport rep;
    rep.sum_vertices = sum.vertices.size();
    std::vector<size_t> counts;
    for (const auto& p : polys)
        counts.push_back(p.vertices.size());
    rep.rhs = minkowski_lower_bound_rhs(counts, d);
    rep.holds = static_cast<long long>(rep.sum_vertices) >= rep.rhs;
    rep.degenerate = !sum.full_dimensional();

    bool all_positive_dim = true;
    for (const auto& p : polys)
        all_positive_dim = all_positive_dim && p.affine_dim >= 1;
    if (all_positive_dim) {
        long long z = 0;
        for (size_t k = 0; k < d; ++k)
            z += 2 * binomial(polys.size() - 1, k);
        rep.zonotope_rhs = z;
        rep.zonotope_holds = static_cast<long long>(rep.sum_vertices) >= z;
    }
    return rep;
}

long long linear_region_bound(const RationalRep& r)
{
    if (r.dim() != 2)
        throw DimensionMismatch("linear_region_bound is for two variables");
    Signomial g = expand(r.num);
    Signomial h = expand(r.den);
    PlanarComplex vg = tropical_curve(g);
    PlanarComplex vh = tropical_curve(h);
    long long chi = euler_characteristic(intersection_complex(vg, vh));
    return static_cast<long long>(mlen(g)) + static_cast<long long>(mlen(h)) + chi;
}

}  // namespace tropmin
