#include "tropmin/json_io.hpp"

#include <nlohmann/json.hpp>

namespace tropmin {

namespace {

Json rat(const Rational& r) { return r.str(); }

Rational rat_of(const Json& j)
{
    if (!j.is_string())
        throw ParseError("expected a rational string");
    return parse_rational(j.get<std::string>());
}

Json vec2(const Vec2& v) { return Json::array({rat(v.x), rat(v.y)}); }

Vec2 vec2_of(const Json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw ParseError("expected a coordinate pair");
    return {rat_of(j[0]), rat_of(j[1])};
}

Json qvec(const QVec& v)
{
    Json a = Json::array();
    for (const auto& c : v)
        a.push_back(rat(c));
    return a;
}

QVec qvec_of(const Json& j)
{
    QVec v;
    for (const auto& c : j)
        v.push_back(rat_of(c));
    return v;
}

}  // namespace

Json to_json(const Polytope& p)
{
    Json j;
    j["dim"] = p.dim;
    j["affine_dim"] = p.affine_dim;
    Json verts = Json::array();
    for (const auto& v : p.vertices)
        verts.push_back(qvec(v));
    j["vertices"] = std::move(verts);
    return j;
}

Polytope polytope_from_json(const Json& j)
{
    std::vector<Point> pts;
    for (const auto& v : j.at("vertices"))
        pts.push_back(qvec_of(v));
    return convex_hull(pts, j.at("dim").get<size_t>());
}

namespace {

Json monomials_json(const Signomial& s)
{
    Json a = Json::array();
    for (const auto& m : s.monomials())
        a.push_back(Json{{"coeff", rat(m.coeff)}, {"exp", qvec(m.exps)}});
    return a;
}

Signomial signomial_of_monomials(size_t dim, const Json& a)
{
    std::vector<Monomial> ms;
    for (const auto& m : a)
        ms.push_back({rat_of(m.at("coeff")), qvec_of(m.at("exp"))});
    return Signomial(dim, std::move(ms));
}

}  // namespace

Json to_json(const Signomial& s)
{
    return Json{{"dim", s.dim()}, {"factors", Json::array({monomials_json(s)})}};
}

Json to_json(const Factorization& f)
{
    Json factors = Json::array();
    for (const auto& g : f.factors)
        factors.push_back(monomials_json(g));
    return Json{{"dim", f.dim()}, {"factors", std::move(factors)}};
}

Json to_json(const RationalRep& r)
{
    return Json{{"dim", r.dim()},
                {"num", to_json(r.num)["factors"]},
                {"den", to_json(r.den)["factors"]}};
}

Factorization factorization_from_json(const Json& j)
{
    size_t dim = j.at("dim").get<size_t>();
    std::vector<Signomial> factors;
    for (const auto& f : j.at("factors"))
        factors.push_back(signomial_of_monomials(dim, f));
    return Factorization(std::move(factors));
}

Signomial signomial_from_json(const Json& j)
{
    return expand(factorization_from_json(j));
}

RationalRep rational_rep_from_json(const Json& j)
{
    size_t dim = j.at("dim").get<size_t>();
    auto fact = [&](const Json& a) {
        std::vector<Signomial> fs;
        for (const auto& f : a)
            fs.push_back(signomial_of_monomials(dim, f));
        return Factorization(std::move(fs));
    };
    return RationalRep(fact(j.at("num")), fact(j.at("den")));
}

Json to_json(const Subdivision& s)
{
    Json j;
    j["base"] = to_json(s.base);
    Json verts = Json::array();
    for (const auto& v : s.vertices)
        verts.push_back(vec2(v));
    j["vertices"] = std::move(verts);
    Json cells = Json::array();
    for (const auto& c : s.cells) {
        Json poly = Json::array(), pts = Json::array();
        for (const auto& p : c.polygon)
            poly.push_back(vec2(p));
        for (const auto& p : c.points)
            pts.push_back(vec2(p));
        cells.push_back(Json{{"polygon", std::move(poly)}, {"points", std::move(pts)}});
    }
    j["cells"] = std::move(cells);
    return j;
}

Json to_json(const PlanarComplex& x)
{
    Json verts = Json::array();
    for (const auto& v : x.vertices)
        verts.push_back(vec2(v));
    Json edges = Json::array();
    for (const auto& e : x.edges) {
        Json je;
        je["kind"] = e.kind == PCEdge::Segment ? "segment" : "ray";
        je["a"] = e.a;
        if (e.kind == PCEdge::Segment)
            je["b"] = e.b;
        else
            je["b"] = vec2(e.dir);
        je["w"] = vec2(e.w.vec());
        edges.push_back(std::move(je));
    }
    return Json{{"vertices", std::move(verts)}, {"edges", std::move(edges)}};
}

PlanarComplex complex_from_json(const Json& j)
{
    std::vector<Vec2> verts;
    for (const auto& v : j.at("vertices"))
        verts.push_back(vec2_of(v));
    std::vector<Piece> pieces;
    std::vector<Vec2> isolated = verts;
    for (const auto& e : j.at("edges")) {
        auto w = vec2_of(e.at("w"));
        auto ps = primitive_line(w);
        size_t a = e.at("a").get<size_t>();
        if (e.at("kind") == "segment") {
            size_t b = e.at("b").get<size_t>();
            pieces.push_back(Piece::segment(verts.at(a), verts.at(b), ps.lambda));
        } else {
            pieces.push_back(Piece::ray(verts.at(a), vec2_of(e.at("b")), ps.lambda));
        }
    }
    if (pieces.empty() && isolated.empty())
        return {};
    return assemble(std::move(pieces), isolated, true);
}

Json to_json(const SignedComplex& x)
{
    return Json{{"pos", to_json(x.pos)}, {"neg", to_json(x.neg)}};
}

SignedComplex signed_complex_from_json(const Json& j)
{
    return {complex_from_json(j.at("pos")), complex_from_json(j.at("neg"))};
}

Json to_json(const WeightedFan& f)
{
    Json rays = Json::array();
    for (const auto& r : f.rays)
        rays.push_back(vec2(r.vec()));
    return Json{{"base", vec2(f.base)}, {"rays", std::move(rays)}};
}

WeightedFan fan_from_json(const Json& j)
{
    std::vector<FanRay> rays;
    for (const auto& r : j.at("rays")) {
        Vec2 v = vec2_of(r);
        auto ps = primitive_line(v);
        rays.push_back({primitive_oriented(v), ps.lambda});
    }
    return WeightedFan(vec2_of(j.at("base")), std::move(rays));
}

Json to_json(const SignedFan& f)
{
    Json pos = Json::array(), neg = Json::array();
    for (const auto& r : f.pos.rays)
        pos.push_back(vec2(r.vec()));
    for (const auto& r : f.neg.rays)
        neg.push_back(vec2(r.vec()));
    return Json{{"base", vec2(f.base)}, {"pos", std::move(pos)}, {"neg", std::move(neg)}};
}

SignedFan signed_fan_from_json(const Json& j)
{
    auto rays_of = [](const Json& a) {
        std::vector<FanRay> rays;
        for (const auto& r : a) {
            Vec2 v = vec2_of(r);
            auto ps = primitive_line(v);
            rays.push_back({primitive_oriented(v), ps.lambda});
        }
        return rays;
    };
    return SignedFan(vec2_of(j.at("base")), rays_of(j.at("pos")), rays_of(j.at("neg")));
}

Json to_json(const PL1D& f)
{
    Json bps = Json::array();
    for (const auto& b : f.breakpoints)
        bps.push_back(Json{{"x", rat(b.x)},
                           {"change", rat(b.change)},
                           {"kind", b.convex ? "convex" : "concave"}});
    return Json{{"breakpoints", std::move(bps)},
                {"anchor", Json{{"x", rat(f.anchor_x)}, {"value", rat(f.anchor_value)}}},
                {"slope_left", rat(f.slope_left)}};
}

PL1D pl1d_from_json(const Json& j)
{
    PL1D f;
    for (const auto& b : j.at("breakpoints")) {
        std::string kind = b.at("kind").get<std::string>();
        if (kind != "convex" && kind != "concave")
            throw ParseError("breakpoint kind must be convex or concave");
        f.breakpoints.push_back({rat_of(b.at("x")), rat_of(b.at("change")), kind == "convex"});
    }
    f.anchor_x = rat_of(j.at("anchor").at("x"));
    f.anchor_value = rat_of(j.at("anchor").at("value"));
    f.slope_left = rat_of(j.at("slope_left"));
    return f;
}

Json to_json(const CountReport& r)
{
    Json terms = Json::array();
    for (const auto& t : r.terms)
        terms.push_back(Json{{"subset", t.subset}, {"chi", t.chi}, {"term", t.term}});
    Json j{{"flen", r.flen}, {"mlen_formula", r.mlen_formula}, {"terms", std::move(terms)}};
    if (r.mlen_oracle)
        j["mlen_oracle"] = *r.mlen_oracle;
    return j;
}

Json to_json(const BoundReport& r)
{
    Json pairs = Json::array();
    for (const auto& [subset, kind] : r.pair_kinds)
        pairs.push_back(Json{{"pair", subset}, {"intersection", kind}});
    return Json{{"count", to_json(r.count)}, {"rhs", r.rhs},     {"holds", r.holds},
                {"tight", r.tight},          {"generic", r.generic}, {"pairs", std::move(pairs)}};
}

Json to_json(const MinkowskiReport& r)
{
    Json j{{"sum_vertices", r.sum_vertices},
           {"rhs", r.rhs},
           {"holds", r.holds},
           {"degenerate", r.degenerate}};
    if (r.zonotope_rhs) {
        j["zonotope_rhs"] = *r.zonotope_rhs;
        j["zonotope_holds"] = r.zonotope_holds;
    }
    return j;
}

Json to_json(const BalancingResult& r)
{
    Json fans = Json::array();
    for (const auto& f : r.fans)
        fans.push_back(to_json(f));
    Json added = Json::array();
    for (const auto& a : r.added)
        added.push_back(vec2(a));
    return Json{{"partition", r.partition}, {"fans", std::move(fans)},
                {"added", std::move(added)}, {"mlen", r.mlen},
                {"flen", r.flen},            {"degenerate", r.degenerate}};
}

Json to_json(const Arrangement& a)
{
    Json lines = Json::array();
    for (const auto& l : a.lines)
        lines.push_back(Json{{"point", vec2(l.point)}, {"dir", vec2(l.dir)},
                             {"w", vec2(l.w.vec())}});
    return Json{{"lines", std::move(lines)}, {"flen", a.flen()}};
}

Json to_json(const FlenBoundReport& r)
{
    return Json{{"arrangement_flen", r.arrangement_flen},
                {"balancing_flen", r.balancing_flen},
                {"holds", r.holds}};
}

Json to_json(const UnionBalancing& u)
{
    Json fans = Json::array();
    for (const auto& f : u.fans)
        fans.push_back(to_json(f));
    return Json{{"fans", std::move(fans)}, {"flen", u.flen}};
}

Json to_json(const BalancingWitness& w)
{
    return Json{{"x", to_json(w.x)},
                {"y1", to_json(w.y1)},
                {"y2", to_json(w.y2)},
                {"mlen_y1", w.mlen_y1},
                {"mlen_y2", w.mlen_y2},
                {"flen_y1", w.flen_y1},
                {"flen_y2", w.flen_y2},
                {"paper_mlen_y2", w.paper_mlen_y2},
                {"y1_balances", w.y1_balances},
                {"y2_balances", w.y2_balances}};
}

}  // namespace tropmin
