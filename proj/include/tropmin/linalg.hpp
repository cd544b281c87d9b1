#pragma once

#include "tropmin/rational.hpp"

#include <optional>
#include <vector>

namespace tropmin {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

inline QVec qvec_sub(const QVec& a, const QVec& b)
{
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline QVec qvec_add(const QVec& a, const QVec& b)
{
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline Rational qvec_dot(const QVec& a, const QVec& b)
{
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline bool qvec_is_zero(const QVec& a)
{
    for (const auto& v : a)
        if (v != 0)
            return false;
    return true;
}

/// Rank by fraction-free-ish Gaussian elimination (exact rationals, any
/// nonzero pivot).
inline size_t rank(QMat m)
{
    size_t rows = m.size();
    if (rows == 0)
        return 0;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0)
                continue;
            Rational f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Solve a square system A x = b exactly. Empty result if A is singular.
inline std::optional<QVec> solve_square(QMat a, QVec b)
{
    size_t n = a.size();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0)
                continue;
            Rational f = a[i][c] / a[c][c];
            for (size_t j = c; j < n; ++j)
                a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    QVec x(n);
    for (size_t i = 0; i < n; ++i)
        x[i] = b[i] / a[i][i];
    return x;
}

/// Solve A x = b for a consistent (possibly non-square) full-column-rank
/// system; returns nullopt when inconsistent or rank-deficient.
inline std::optional<QVec> solve_full_column_rank(QMat a, QVec b)
{
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<size_t> pivot_row(cols);
    size_t r = 0;
    for (size_t c = 0; c < cols; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0)
            ++piv;
        if (piv == rows)
            return std::nullopt;  // rank-deficient
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Rational f = a[i][c] / a[r][c];
            for (size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_row[c] = r;
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (b[i] != 0)
            return std::nullopt;  // inconsistent
    QVec x(cols);
    for (size_t c = 0; c < cols; ++c)
        x[c] = b[pivot_row[c]] / a[pivot_row[c]][c];
    return x;
}

}  // namespace tropmin
