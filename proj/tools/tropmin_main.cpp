// Command-line interface: parse tropical expressions or JSON inputs, run
// one operation, print JSON. Exit codes: 0 ok, 1 verification failure,
// 2 input error.

#include "tropmin/acceptance.hpp"
#include "tropmin/counting.hpp"
#include "tropmin/json_io.hpp"
#include "tropmin/minimize.hpp"
#include "tropmin/parser.hpp"
#include "tropmin/svg.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace tropmin;

std::string slurp(const std::string& arg)
{
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in)
            throw ParseError("cannot open file: " + arg.substr(1));
        return std::string(std::istreambuf_iterator<char>(in), {});
    }
    return arg;
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad JSON input: ") + e.what());
    }
}

bool looks_like_json(const std::string& s)
{
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            return c == '{';
    return false;
}

Signomial signomial_arg(const std::string& raw, std::optional<size_t> dim)
{
    std::string text = slurp(raw);
    return looks_like_json(text) ? signomial_from_json(parse_json(text))
                                 : parse_signomial(text, dim);
}

Factorization factorization_arg(const std::string& raw, std::optional<size_t> dim)
{
    std::string text = slurp(raw);
    return looks_like_json(text) ? factorization_from_json(parse_json(text))
                                 : parse_factorization(text, dim);
}

RationalRep rep_arg(const std::string& raw, std::optional<size_t> dim)
{
    std::string text = slurp(raw);
    return looks_like_json(text) ? rational_rep_from_json(parse_json(text))
                                 : parse_rational_rep(text, dim);
}

Point point_arg(const std::string& text)
{
    Point p;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty())
                p.push_back(parse_rational(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (p.empty())
        throw ParseError("empty evaluation point");
    return p;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void maybe_svg(const std::string& path, const std::string& svg)
{
    if (path.empty())
        return;
    std::ofstream out(path);
    out << svg;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact tropical rational signomials: lengths, region counts, "
                 "minimal representations and balancings"};
    app.require_subcommand(1);

    std::string expr, expr2, at_point, svg_path, length_kind = "mlen";
    std::vector<std::string> exprs;
    uint64_t seed = 20240817;
    bool with_oracle = false;
    bool lifted = false;
    std::optional<size_t> dim;

    auto add_dim = [&](CLI::App* cmd) {
        cmd->add_option("--dim", dim, "ambient dimension (default: inferred)");
    };

    auto* c_eval = app.add_subcommand("eval", "evaluate a signomial or rational signomial");
    c_eval->add_option("expr", expr)->required();
    c_eval->add_option("--at", at_point, "comma-separated rational coordinates")->required();
    add_dim(c_eval);

    auto* c_reduce = app.add_subcommand("reduce", "drop redundant monomials");
    c_reduce->add_option("expr", expr)->required();
    add_dim(c_reduce);

    auto* c_mlen = app.add_subcommand("mlen", "monomial length");
    c_mlen->add_option("expr", expr)->required();
    add_dim(c_mlen);

    auto* c_flen = app.add_subcommand("flen", "factorization length");
    c_flen->add_option("expr", expr)->required();
    add_dim(c_flen);

    auto* c_newton = app.add_subcommand("newton", "Newton polytope (or lifted)");
    c_newton->add_option("expr", expr)->required();
    c_newton->add_flag("--lifted", lifted, "lift by coefficients");
    add_dim(c_newton);

    auto* c_subdiv = app.add_subcommand("subdivision", "regular subdivision of the Newton polytope");
    c_subdiv->add_option("expr", expr)->required();
    add_dim(c_subdiv);

    auto* c_curve = app.add_subcommand("curve", "tropical curve of a 2-variable signomial");
    c_curve->add_option("expr", expr)->required();
    c_curve->add_option("--svg", svg_path, "write a figure");
    add_dim(c_curve);

    auto* c_overlay = app.add_subcommand("overlay", "overlay the curves of several signomials");
    c_overlay->add_option("exprs", exprs)->required()->expected(-2);
    c_overlay->add_option("--svg", svg_path, "write a figure");

    auto* c_corner = app.add_subcommand("cornerlocus", "signed corner locus of a rational signomial");
    c_corner->add_option("expr", expr)->required();
    c_corner->add_option("--svg", svg_path, "write a figure");
    add_dim(c_corner);

    auto* c_regions = app.add_subcommand("regions", "region count of an arrangement of curves");
    c_regions->add_option("exprs", exprs)->required();
    c_regions->add_flag("--oracle", with_oracle, "cross-check with the face-walk oracle");

    auto* c_bounds = app.add_subcommand("bounds", "generic lower bound check");
    c_bounds->add_option("exprs", exprs)->required();
    c_bounds->add_flag("--oracle", with_oracle);

    auto* c_mink = app.add_subcommand("minkowski", "Minkowski sum vertex bound check");
    c_mink->add_option("polys", exprs, "polytopes as JSON {dim, vertices}")->required();

    auto* c_min1d = app.add_subcommand("min1d", "minimal representation of a 1-d function");
    c_min1d->add_option("input", expr, "PL1D JSON")->required();

    auto* c_balance = app.add_subcommand("balancefan", "minimal balancings of a weighted fan");
    c_balance->add_option("fan", expr, "fan JSON {base, rays}")->required();
    c_balance->add_option("--length", length_kind, "mlen|flen")->check(CLI::IsMember({"mlen", "flen"}));

    auto* c_minrep = app.add_subcommand("minrepfan", "minimal representation of an irreducible signed fan");
    c_minrep->add_option("fan", expr, "signed fan JSON {base, pos, neg}")->required();

    auto* c_canon = app.add_subcommand("canonical", "canonical arrangement of a complex");
    c_canon->add_option("complex", expr, "complex JSON")->required();
    c_canon->add_option("--svg", svg_path, "write a figure");

    auto* c_witness = app.add_subcommand("witness", "the two-length counterexample pair");

    auto* c_verify = app.add_subcommand("verify-all", "run the full verification suite");
    c_verify->add_option("--seed", seed, "seed for the randomized families");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_eval->parsed()) {
            RationalRep r = rep_arg(expr, dim);
            emit(Json{{"value", evaluate_rational(r, point_arg(at_point)).str()}});
        } else if (c_reduce->parsed()) {
            emit(to_json(reduce(signomial_arg(expr, dim))));
        } else if (c_mlen->parsed()) {
            emit(Json{{"mlen", mlen(signomial_arg(expr, dim))}});
        } else if (c_flen->parsed()) {
            emit(Json{{"flen", flen(factorization_arg(expr, dim))}});
        } else if (c_newton->parsed()) {
            Signomial s = signomial_arg(expr, dim);
            emit(to_json(lifted ? lifted_newton(s) : newton_polytope(s)));
        } else if (c_subdiv->parsed()) {
            emit(to_json(regular_subdivision(signomial_arg(expr, dim))));
        } else if (c_curve->parsed()) {
            PlanarComplex x = tropical_curve(signomial_arg(expr, dim));
            maybe_svg(svg_path, render_svg(x));
            emit(to_json(x));
        } else if (c_overlay->parsed()) {
            PlanarComplex x = tropical_curve(signomial_arg(exprs[0], 2));
            for (size_t i = 1; i < exprs.size(); ++i)
                x = overlay(x, tropical_curve(signomial_arg(exprs[i], 2)));
            maybe_svg(svg_path, render_svg(x));
            emit(to_json(x));
        } else if (c_corner->parsed()) {
            SignedComplex x = corner_locus(rep_arg(expr, dim));
            maybe_svg(svg_path, render_svg(x));
            emit(to_json(x));
        } else if (c_regions->parsed()) {
            std::vector<Signomial> gs;
            for (const auto& e : exprs)
                gs.push_back(signomial_arg(e, 2));
            CountReport r = region_count_formula(gs, with_oracle);
            emit(to_json(r));
            if (with_oracle && r.mlen_oracle != r.mlen_formula)
                return 1;
        } else if (c_bounds->parsed()) {
            std::vector<Signomial> gs;
            for (const auto& e : exprs)
                gs.push_back(signomial_arg(e, 2));
            emit(to_json(check_lower_bound(gs, with_oracle)));
        } else if (c_mink->parsed()) {
            std::vector<Polytope> polys;
            for (const auto& e : exprs)
                polys.push_back(polytope_from_json(parse_json(slurp(e))));
            emit(to_json(check_minkowski_bound(polys)));
        } else if (c_min1d->parsed()) {
            PL1D f = pl1d_from_json(parse_json(slurp(expr)));
            emit(to_json(minimal_representation_1d(f)));
        } else if (c_balance->parsed()) {
            WeightedFan f = fan_from_json(parse_json(slurp(expr)));
            if (length_kind == "mlen") {
                emit(to_json(minimal_balancing_fan_mlen(f)));
            } else {
                Json arr = Json::array();
                for (const auto& r : enumerate_flen_minimal_balancings(f))
                    arr.push_back(to_json(r));
                emit(Json{{"count", arr.size()}, {"balancings", std::move(arr)}});
            }
        } else if (c_minrep->parsed()) {
            SignedFan f = signed_fan_from_json(parse_json(slurp(expr)));
            emit(to_json(minimal_representation_fan(f)));
        } else if (c_canon->parsed()) {
            PlanarComplex x = complex_from_json(parse_json(slurp(expr)));
            Arrangement a = canonical_arrangement(x);
            maybe_svg(svg_path, render_svg(complex_of_arrangement(a)));
            emit(to_json(a));
        } else if (c_witness->parsed()) {
            emit(to_json(balancing_not_unique_witness()));
        } else if (c_verify->parsed()) {
            auto results = run_acceptance(seed);
            bool all = true;
            Json arr = Json::array();
            for (const auto& r : results) {
                all = all && r.pass;
                std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name
                          << (r.detail.empty() ? "" : "  -- " + r.detail) << "\n";
                arr.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass},
                                   {"detail", r.detail}});
            }
            emit(Json{{"seed", seed}, {"all_pass", all}, {"criteria", std::move(arr)}});
            return all ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
