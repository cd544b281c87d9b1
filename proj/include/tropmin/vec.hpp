#pragma once

#include "tropmin/rational.hpp"

#include <array>
#include <compare>
#include <tuple>

namespace tropmin {

/// Exact point/vector in the plane. All predicates below are computed in
/// rational arithmetic; there is no normalization and no square root.
struct Vec2 {
    Rational x, y;

    Vec2() : x(0), y(0) {}
    Vec2(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(const Rational& s) const { return {x * s, y * s}; }

    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
    bool operator<(const Vec2& o) const
    {
        return x != o.x ? x < o.x : y < o.y;
    }

    bool is_zero() const { return x == 0 && y == 0; }
};

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// Rotation by +90 degrees (counterclockwise).
inline Vec2 rot90(const Vec2& v) { return {-v.y, v.x}; }
/// Rotation by -90 degrees (clockwise).
inline Vec2 rot270(const Vec2& v) { return {v.y, -v.x}; }

inline bool parallel(const Vec2& a, const Vec2& b) { return cross(a, b) == 0; }

/// Same direction up to a positive scalar.
inline bool same_direction(const Vec2& a, const Vec2& b)
{
    return cross(a, b) == 0 && dot(a, b) > 0;
}

/// Integer vector with coprime entries pointing the same way as v. v != 0.
inline Vec2 primitive_oriented(const Vec2& v)
{
    if (v.is_zero())
        throw std::invalid_argument("primitive of the zero vector");
    Integer l = boost::multiprecision::lcm(denom(v.x), denom(v.y));
    Integer nx = numer(v.x) * (l / denom(v.x));
    Integer ny = numer(v.y) * (l / denom(v.y));
    Integer g = boost::multiprecision::gcd(boost::multiprecision::abs(nx),
                                           boost::multiprecision::abs(ny));
    return {Rational(nx / g), Rational(ny / g)};
}

/// Primitive vector of the line direction of v with a fixed sign
/// convention (first nonzero coordinate positive), plus the positive
/// multiplier lambda with v == +/- lambda * prim.
struct PrimScale {
    Vec2 prim;
    Rational lambda;  // > 0
};

inline PrimScale primitive_line(const Vec2& v)
{
    Vec2 p = primitive_oriented(v);
    bool flip = p.x != 0 ? p.x < 0 : p.y < 0;
    if (flip)
        p = -p;
    Rational lam = p.x != 0 ? v.x / p.x : v.y / p.y;
    return {p, rational_abs(lam)};
}

/// Angular order starting at the positive x-axis, counterclockwise.
/// Total order on nonzero directions; exact.
inline bool angle_less(const Vec2& a, const Vec2& b)
{
    auto half = [](const Vec2& v) {
        return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb)
        return ha < hb;
    Rational c = cross(a, b);
    return c > 0;
}

}  // namespace tropmin
