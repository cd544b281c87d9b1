#pragma once

#include "tropmin/signomial.hpp"

#include <optional>
#include <string>

namespace tropmin {

/// Text grammar for tropical expressions:
///
///   signomial      :=  term ('+' term)*
///   term           :=  atom ('*' atom)*
///   atom           :=  rational | var ['^' rational]
///   factorization  :=  '(' signomial ')' ('*' '(' signomial ')')*
///                   |  signomial
///   rational rep   :=  factorization '/' factorization
///
/// '+' is tropical addition (max), '*' tropical multiplication (+).
/// Variables are x, y, z (or x1, x2, x3). Rationals are written without
/// spaces ("-2/3"); a bare coefficient is an ordinary summand ("1 + y").
/// The dimension is inferred from the variables used unless given.
Signomial parse_signomial(const std::string& text, std::optional<size_t> dim = {});
Factorization parse_factorization(const std::string& text, std::optional<size_t> dim = {});
RationalRep parse_rational_rep(const std::string& text, std::optional<size_t> dim = {});

}  // namespace tropmin
