#pragma once

#include "tropmin/polytope.hpp"
#include "tropmin/vec.hpp"

#include <vector>

namespace tropmin {

/// Tropical monomial coeff (.) x1^e1 (.) ... (.) xd^ed, i.e. the affine
/// function coeff + <exps, x>. Exponents may be any rationals.
struct Monomial {
    Rational coeff;
    QVec exps;

    bool operator==(const Monomial& o) const = default;
};

/// Tropical sum (max) of monomials with pairwise distinct exponent
/// vectors; duplicates merge by taking the larger coefficient.
class Signomial {
  public:
    Signomial(size_t dim, std::vector<Monomial> monomials);

    size_t dim() const { return dim_; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    size_t size() const { return monomials_.size(); }

    bool operator==(const Signomial& o) const
    {
        return dim_ == o.dim_ && monomials_ == o.monomials_;
    }

  private:
    size_t dim_;
    std::vector<Monomial> monomials_;  // sorted by exponent vector
};

/// Ordered list of signomials understood as a tropical product.
struct Factorization {
    std::vector<Signomial> factors;

    explicit Factorization(std::vector<Signomial> fs);
    size_t dim() const { return factors.front().dim(); }
};

/// Pair of factorizations; as a function, numerator minus denominator.
struct RationalRep {
    Factorization num;
    Factorization den;

    RationalRep(Factorization n, Factorization d);
    size_t dim() const { return num.dim(); }
};

Rational evaluate(const Signomial& s, const Point& x);
Rational evaluate(const Factorization& f, const Point& x);
Rational evaluate_rational(const RationalRep& r, const Point& x);

/// Multiply out a factorization into a single signomial: one monomial per
/// choice of one monomial per factor, coincident exponent sums keeping
/// the max coefficient.
Signomial expand(const Factorization& f);

/// Keep exactly the monomials that uniquely achieve the max somewhere;
/// the result defines the same function. Equivalently the monomials
/// whose lifted points are upper vertices of the lifted Newton polytope.
Signomial reduce(const Signomial& s);

/// Monomial length: monomial count of the reduced signomial.
size_t mlen(const Signomial& s);

/// Factorization length: sum of factor mlens minus (#factors - 1).
size_t flen(const Factorization& f);

Polytope newton_polytope(const Signomial& s);   // dim 2..3
Polytope lifted_newton(const Signomial& s);     // dim 1..3, coeff as height

/// Cell of a regular subdivision of a 2-d Newton polytope. `polygon` is
/// the ccw vertex cycle (2 points for a 1-d cell, 1 for a point);
/// `points` lists every exponent lying on the cell; `gradient` is the
/// affine support of the cell's lifted face, so the dual curve vertex of
/// a 2-d cell sits at -gradient.
struct SubdivisionCell {
    std::vector<Vec2> polygon;
    std::vector<Vec2> points;
    Vec2 gradient;
    Rational height_offset;
};

struct Subdivision {
    Polytope base;
    std::vector<SubdivisionCell> cells;
    std::vector<Vec2> vertices;
};

/// Regular subdivision of the Newton polytope induced by the lifted
/// Newton polytope (projected upper faces). Two-variable signomials.
Subdivision regular_subdivision(const Signomial& s);

inline Vec2 exps2(const Monomial& m) { return {m.exps[0], m.exps[1]}; }

}  // namespace tropmin
