#include "tropmin/minimize.hpp"

#include "tropmin/parser.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace tropmin {

Rational pl1d_evaluate(const PL1D& f, const Rational& x)
{
    auto raw = [&](const Rational& t) {
        Rational v = f.slope_left * t;
        for (const auto& b : f.breakpoints)
            if (t > b.x) {
                Rational kink = b.change * (t - b.x);
                v += b.convex ? kink : -kink;
            }
        return v;
    };
    return f.anchor_value + raw(x) - raw(f.anchor_x);
}

RationalRep minimal_representation_1d(const PL1D& f)
{
    for (size_t i = 0; i + 1 < f.breakpoints.size(); ++i)
        if (!(f.breakpoints[i].x < f.breakpoints[i + 1].x))
            throw std::invalid_argument("breakpoints must be strictly increasing");
    for (const auto& b : f.breakpoints)
        if (!(b.change > 0))
            throw std::invalid_argument("slope changes must be positive");

    auto root_factor = [](const Breakpoint& b) {
        // (x (+) x_i)^(a_i) = max(a_i x, a_i x_i)
        return Signomial(1, {{Rational(0), {b.change}}, {b.change * b.x, {Rational(0)}}});
    };
    std::vector<Signomial> num, den;
    for (const auto& b : f.breakpoints)
        (b.convex ? num : den).push_back(root_factor(b));

    // psi = sum of convex kinks minus concave kinks has slope 0 at -inf;
    // the linear correction beta*x + alpha restores the anchor data
    Rational beta = f.slope_left;
    Rational psi_at_anchor = 0;
    for (const auto& b : f.breakpoints) {
        Rational v = b.change * std::max(f.anchor_x, b.x);
        psi_at_anchor += b.convex ? v : -v;
    }
    Rational alpha = f.anchor_value - psi_at_anchor - beta * f.anchor_x;

    Monomial correction{alpha, {beta}};
    if (num.empty()) {
        num.push_back(Signomial(1, {correction}));
    } else {
        std::vector<Monomial> shifted;
        for (const auto& m : num[0].monomials())
            shifted.push_back({m.coeff + correction.coeff,
                               {m.exps[0] + correction.exps[0]}});
        num[0] = Signomial(1, std::move(shifted));
    }
    if (den.empty())
        den.push_back(Signomial(1, {{Rational(0), {Rational(0)}}}));
    return RationalRep(Factorization(std::move(num)), Factorization(std::move(den)));
}

bool is_completely_unbalanced(const WeightedFan& f)
{
    size_t m = f.rays.size();
    if (m > 20)
        throw RayLimitExceeded();
    std::vector<Vec2> vecs;
    for (const auto& r : f.rays)
        vecs.push_back(r.vec());
    for (size_t mask = 1; mask < (size_t{1} << m); ++mask) {
        if (__builtin_popcountll(mask) < 2)
            continue;
        Vec2 s(0, 0);
        for (size_t i = 0; i < m; ++i)
            if (mask & (size_t{1} << i))
                s += vecs[i];
        if (s.is_zero())
            return false;
    }
    return true;
}

namespace {

// balance one block of rays by its own added ray; reports degeneracy
// when the added ray is parallel to an existing one
WeightedFan balance_block(const WeightedFan& f, const std::vector<size_t>& block,
                          Vec2& added, bool& degenerate)
{
    Vec2 s(0, 0);
    std::vector<FanRay> rays;
    for (size_t i : block) {
        rays.push_back(f.rays[i]);
        s += f.rays[i].vec();
    }
    added = -s;
    assert(!added.is_zero());
    for (size_t i : block)
        if (same_direction(added, f.rays[i].dir))
            degenerate = true;
    auto ps = primitive_line(added);
    Vec2 dir = primitive_oriented(added);
    rays.push_back({dir, ps.lambda});
    return WeightedFan(f.base, std::move(rays));
}

size_t union_mlen(const Vec2& base, const std::vector<WeightedFan>& fans)
{
    std::vector<FanRay> all;
    for (const auto& f : fans)
        for (const auto& r : f.rays)
            all.push_back(r);
    return WeightedFan(base, std::move(all)).rays.size();
}

}  // namespace

BalancingResult minimal_balancing_fan_mlen(const WeightedFan& f)
{
    if (!is_completely_unbalanced(f))
        throw NotCompletelyUnbalanced();
    BalancingResult res;
    std::vector<size_t> all(f.rays.size());
    for (size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    Vec2 added;
    res.fans.push_back(balance_block(f, all, added, res.degenerate));
    res.partition.push_back(all);
    res.added.push_back(added);
    res.mlen = res.fans[0].rays.size();
    res.flen = res.mlen;
    return res;
}

std::vector<std::vector<std::vector<size_t>>> set_partitions(size_t m)
{
    std::vector<std::vector<std::vector<size_t>>> out;
    std::vector<size_t> rgs(m, 0);
    while (true) {
        size_t blocks = m ? *std::max_element(rgs.begin(), rgs.end()) + 1 : 0;
        std::vector<std::vector<size_t>> part(blocks);
        for (size_t i = 0; i < m; ++i)
            part[rgs[i]].push_back(i);
        out.push_back(std::move(part));
        // next restricted growth string
        size_t i = m;
        while (i-- > 1) {
            size_t maxprefix = *std::max_element(rgs.begin(), rgs.begin() + static_cast<long>(i));
            if (rgs[i] <= maxprefix) {
                ++rgs[i];
                std::fill(rgs.begin() + static_cast<long>(i) + 1, rgs.end(), 0);
                break;
            }
        }
        if (i == 0 || m <= 1)
            break;
    }
    return out;
}

std::vector<BalancingResult> enumerate_flen_minimal_balancings(const WeightedFan& f)
{
    size_t m = f.rays.size();
    if (m > 10)
        throw RayLimitExceeded();
    if (!is_completely_unbalanced(f))
        throw NotCompletelyUnbalanced();
    std::vector<BalancingResult> out;
    for (auto& part : set_partitions(m)) {
        BalancingResult res;
        for (auto& block : part) {
            Vec2 added;
            res.fans.push_back(balance_block(f, block, added, res.degenerate));
            res.added.push_back(added);
        }
        res.partition = std::move(part);
        size_t total = 0;
        for (const auto& bf : res.fans)
            total += bf.rays.size();
        res.flen = total - (res.fans.size() - 1);
        res.mlen = union_mlen(f.base, res.fans);
        out.push_back(std::move(res));
    }
    return out;
}

SignedFan::SignedFan(Vec2 base_, std::vector<FanRay> pos_rays, std::vector<FanRay> neg_rays)
    : base(std::move(base_))
{
    std::map<Vec2, Rational> net;
    for (auto& r : pos_rays)
        net[primitive_oriented(r.dir)] += r.lambda;
    for (auto& r : neg_rays)
        net[primitive_oriented(r.dir)] -= r.lambda;
    std::vector<FanRay> p, n;
    for (auto& [d, lam] : net) {
        if (lam > 0)
            p.push_back({d, lam});
        else if (lam < 0)
            n.push_back({d, -lam});
    }
    pos = WeightedFan(base, std::move(p));
    neg = WeightedFan(base, std::move(n));
}

SignedFan signed_fan_of(const SignedComplex& c)
{
    std::optional<Vec2> base;
    auto scan = [&](const PlanarComplex& part, std::vector<FanRay>& rays) {
        for (const auto& e : part.edges) {
            if (e.kind != PCEdge::Ray)
                throw NotAFan("complex has a bounded 1-cell");
            const Vec2& b = part.vertices[e.a];
            if (base && !(*base == b))
                throw NotAFan("rays are not based at a common point");
            base = b;
            rays.push_back({e.dir, e.w.lambda});
        }
    };
    std::vector<FanRay> pos, neg;
    scan(c.pos, pos);
    scan(c.neg, neg);
    if (!base)
        return SignedFan(Vec2(0, 0), {}, {});
    return SignedFan(*base, std::move(pos), std::move(neg));
}

bool is_irreducible_fan(const SignedFan& s)
{
    std::vector<Vec2> vecs;
    for (const auto& r : s.pos.rays)
        vecs.push_back(r.vec());
    for (const auto& r : s.neg.rays)
        vecs.push_back(-r.vec());
    size_t n = vecs.size();
    if (n > 20)
        throw RayLimitExceeded();
    if (n == 0)
        return true;
    for (size_t mask = 1; mask + 1 < (size_t{1} << n); ++mask) {
        Vec2 sum(0, 0);
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t{1} << i))
                sum += vecs[i];
        if (sum.is_zero())
            return false;
    }
    return true;
}

Signomial fan_dual_signomial(const WeightedFan& f)
{
    assert(is_balanced_fan(f));
    std::vector<Vec2> edges;
    for (const auto& r : f.rays)
        edges.push_back(rot90(r.vec()));
    std::sort(edges.begin(), edges.end(), angle_less);
    std::vector<Monomial> ms;
    Vec2 v(0, 0);
    for (const auto& e : edges) {
        ms.push_back({-dot(v, f.base), {v.x, v.y}});
        v += e;
    }
    assert(v.is_zero());
    return Signomial(2, std::move(ms));
}

RationalRep minimal_representation_fan(const SignedFan& s)
{
    if (!is_irreducible_fan(s))
        throw Reducible();
    auto build = [&](const WeightedFan& part) {
        if (part.rays.empty())
            return Signomial(2, {{Rational(0), QVec(2, Rational(0))}});
        if (is_balanced_fan(part))
            return fan_dual_signomial(part);
        BalancingResult b = minimal_balancing_fan_mlen(part);
        return fan_dual_signomial(b.fans[0]);
    };
    Signomial g = build(s.pos);
    Signomial h = build(s.neg);
    return RationalRep(Factorization({std::move(g)}), Factorization({std::move(h)}));
}

Arrangement canonical_arrangement(const PlanarComplex& x)
{
    // line key: canonical direction and the (scaled) offset cross(dir, p)
    std::map<std::pair<Vec2, Rational>, Rational> lines;  // -> max lambda
    for (const auto& e : x.edges) {
        const Vec2& a = x.vertices[e.a];
        Vec2 d = e.kind == PCEdge::Segment ? x.vertices[e.b] - a : e.dir;
        auto ps = primitive_line(d);
        Rational off = cross(ps.prim, a);
        auto [it, fresh] = lines.emplace(std::make_pair(ps.prim, off), e.w.lambda);
        if (!fresh && e.w.lambda > it->second)
            it->second = e.w.lambda;
    }
    Arrangement out;
    for (const auto& [key, lam] : lines) {
        const auto& [dir, off] = key;
        ArrangementLine l;
        l.dir = dir;
        l.point = rot90(dir) * (off / dot(dir, dir));
        l.w = {dir, lam};
        out.lines.push_back(std::move(l));
    }
    return out;
}

PlanarComplex complex_of_arrangement(const Arrangement& a)
{
    std::vector<Piece> pieces;
    for (const auto& l : a.lines)
        for (auto& p : line_pieces(l.point, l.dir, l.w.lambda))
            pieces.push_back(std::move(p));
    if (pieces.empty())
        return {};
    return assemble(std::move(pieces));
}

FlenBoundReport verify_flen_bound(const PlanarComplex& x,
                                  const std::vector<PlanarComplex>& balancing)
{
    FlenBoundReport rep;
    rep.arrangement_flen = canonical_arrangement(x).flen();
    size_t total = 0;
    for (const auto& v : balancing) {
        assert(is_balanced(v));
        total += region_count_oracle(v);
    }
    rep.balancing_flen = total - (balancing.size() - 1);
    rep.holds = rep.arrangement_flen <= 3 * rep.balancing_flen;
    return rep;
}

UnionBalancing minimal_balancing_union(const std::vector<WeightedFan>& fans)
{
    if (fans.empty())
        throw std::invalid_argument("minimal_balancing_union needs at least one fan");
    for (size_t i = 0; i < fans.size(); ++i)
        for (size_t j = i + 1; j < fans.size(); ++j)
            if (fans[i].base == fans[j].base)
                throw NotGeneric("fan bases must be pairwise distinct");

    UnionBalancing out;
    for (const auto& f : fans) {
        BalancingResult b = minimal_balancing_fan_mlen(f);  // checks unbalancedness
        out.fans.push_back(b.fans[0]);
    }
    // general position: no ray of one balancing parallel to a ray of
    // another, none passing through another fan's base
    for (size_t i = 0; i < out.fans.size(); ++i) {
        for (size_t j = 0; j < out.fans.size(); ++j) {
            if (i == j)
                continue;
            for (const auto& ri : out.fans[i].rays) {
                for (const auto& rj : out.fans[j].rays)
                    if (parallel(ri.dir, rj.dir))
                        throw NotGeneric("parallel rays across fans");
                Vec2 to_base = out.fans[j].base - out.fans[i].base;
                if (cross(ri.dir, to_base) == 0 && dot(ri.dir, to_base) >= 0)
                    throw NotGeneric("a ray passes through another fan's base");
            }
        }
    }
    size_t total = 0;
    for (const auto& f : fans)
        total += f.rays.size();
    out.flen = total + 1;
    return out;
}

BalancingWitness balancing_not_unique_witness()
{
    // the irreducible signomial, translated so that its bounded triangle
    // coincides with the one of the binomial product below
    Signomial y1 = parse_signomial("-1*x*y^-1 + -1*y^-2 + 1*x^-1*y^-1 + 1 + 1*y", 2);
    Factorization y2 = parse_factorization("(x^-1*y^-1 + 0)*(-2*x*y^-1 + 0)*(y + 0)", 2);
    BalancingWitness w{{}, std::move(y1), std::move(y2), {}, {}, 0, 0, 0, 0, 6, false, false};
    w.y1_curve = tropical_curve(w.y1);
    w.y2_curve = tropical_curve(expand(w.y2));
    w.x = common_cells(w.y1_curve, w.y2_curve);
    w.mlen_y1 = region_count_oracle(w.y1_curve);
    w.mlen_y2 = region_count_oracle(w.y2_curve);
    w.flen_y1 = w.mlen_y1;  // irreducible, taken as a single factor
    w.flen_y2 = flen(w.y2);
    w.y1_balances = dominates(w.y1_curve, w.x);
    w.y2_balances = dominates(w.y2_curve, w.x);
    return w;
}

}  // namespace tropmin
