#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropmin {

/// Exact arbitrary-precision rational. GMP keeps values in lowest terms
/// with a positive denominator, which is the invariant the whole library
/// relies on: no rounding anywhere.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse "p", "-p" or "p/q" (q > 0 after normalization).
inline Rational parse_rational(const std::string& s)
{
    if (s.empty())
        throw ParseError("empty rational literal");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw ParseError("bad rational literal: " + s);
    }
    if (s.find('/') != std::string::npos && s.substr(s.find('/') + 1).empty())
        throw ParseError("bad rational literal: " + s);
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw ParseError("bad rational literal: " + s);
    }
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace tropmin
