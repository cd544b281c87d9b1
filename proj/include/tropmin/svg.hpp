#pragma once

#include "tropmin/planar.hpp"

#include <string>

namespace tropmin {

/// Figure-style rendering of complexes: positive parts black, negative
/// parts red, weights as stroke widths. Output only.
std::string render_svg(const std::vector<std::pair<PlanarComplex, std::string>>& layers,
                       int size_px = 480);

inline std::string render_svg(const PlanarComplex& x, int size_px = 480)
{
    return render_svg({{x, "black"}}, size_px);
}

inline std::string render_svg(const SignedComplex& x, int size_px = 480)
{
    return render_svg({{x.pos, "black"}, {x.neg, "red"}}, size_px);
}

}  // namespace tropmin
