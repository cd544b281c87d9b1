#pragma once

#include "tropmin/linalg.hpp"

#include <algorithm>
#include <set>

namespace tropmin {

/// One strict inequality <coeffs, x> < rhs.
struct StrictRow {
    QVec coeffs;
    Rational rhs;
};

/// Decide feasibility of a system of strict linear inequalities by
/// Fourier-Motzkin elimination. Intended for a handful of variables
/// (signomial dimension <= 3); combinations of strict rows stay strict,
/// so the test is exact.
inline bool strict_system_feasible(std::vector<StrictRow> rows, size_t nvars)
{
    // normalize + dedupe to keep the combination step from blowing up
    auto normalize = [](StrictRow& r) {
        for (const auto& c : r.coeffs) {
            if (c != 0) {
                Rational f = rational_abs(c);
                for (auto& v : r.coeffs)
                    v /= f;
                r.rhs /= f;
                return;
            }
        }
        if (r.rhs != 0) {
            Rational f = rational_abs(r.rhs);
            r.rhs /= f;
        }
    };
    for (size_t var = nvars; var-- > 0;) {
        for (auto& r : rows)
            normalize(r);
        std::set<std::pair<QVec, Rational>> seen;
        std::vector<StrictRow> uniq;
        for (auto& r : rows)
            if (seen.insert({r.coeffs, r.rhs}).second)
                uniq.push_back(std::move(r));
        rows = std::move(uniq);

        std::vector<StrictRow> zero, pos, neg;
        for (auto& r : rows) {
            int s = sign(r.coeffs[var]);
            (s == 0 ? zero : s > 0 ? pos : neg).push_back(std::move(r));
        }
        std::vector<StrictRow> next = std::move(zero);
        if (!pos.empty() && !neg.empty()) {
            for (const auto& u : pos) {
                for (const auto& l : neg) {
                    // (-l_var) * u + u_var * l eliminates x_var; both strict
                    Rational cu = u.coeffs[var], cl = l.coeffs[var];
                    StrictRow d;
                    d.coeffs.resize(u.coeffs.size());
                    for (size_t j = 0; j < u.coeffs.size(); ++j)
                        d.coeffs[j] = -cl * u.coeffs[j] + cu * l.coeffs[j];
                    d.rhs = -cl * u.rhs + cu * l.rhs;
                    next.push_back(std::move(d));
                }
            }
        }
        for (auto& r : next)
            r.coeffs.resize(var);
        rows = std::move(next);
    }
    for (const auto& r : rows)
        if (!(r.rhs > 0))
            return false;
    return true;
}

}  // namespace tropmin
