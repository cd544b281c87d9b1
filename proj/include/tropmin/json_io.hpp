#pragma once

#include "tropmin/counting.hpp"
#include "tropmin/minimize.hpp"

#include <nlohmann/json_fwd.hpp>

namespace tropmin {

using Json = nlohmann::json;

// rationals serialize as strings "p/q" (plain "p" for integers)

Json to_json(const Polytope& p);
Json to_json(const Signomial& s);
Json to_json(const Factorization& f);
Json to_json(const RationalRep& r);
Json to_json(const Subdivision& s);
Json to_json(const PlanarComplex& x);
Json to_json(const SignedComplex& x);
Json to_json(const WeightedFan& f);
Json to_json(const SignedFan& f);
Json to_json(const PL1D& f);
Json to_json(const CountReport& r);
Json to_json(const BoundReport& r);
Json to_json(const MinkowskiReport& r);
Json to_json(const BalancingResult& r);
Json to_json(const Arrangement& a);
Json to_json(const FlenBoundReport& r);
Json to_json(const UnionBalancing& u);
Json to_json(const BalancingWitness& w);

Polytope polytope_from_json(const Json& j);
Signomial signomial_from_json(const Json& j);
Factorization factorization_from_json(const Json& j);
RationalRep rational_rep_from_json(const Json& j);
PlanarComplex complex_from_json(const Json& j);
SignedComplex signed_complex_from_json(const Json& j);
WeightedFan fan_from_json(const Json& j);
SignedFan signed_fan_from_json(const Json& j);
PL1D pl1d_from_json(const Json& j);

}  // namespace tropmin
