#pragma once

#include "hexad/cone.hpp"
#include "hexad/diff_cochain.hpp"
#include "hexad/report.hpp"

namespace hexad {

// JSON encodings of the algebraic elements. Rationals are strings "p/q" so
// that values survive the round trip exactly.
Json to_json(const RatVector& v);
Json to_json(const IntVector& v);
Json to_json(const Chain& c);
Json to_json(const Cochain& c);
Json to_json(const WhitneyForm& w);
Json to_json(const DiffCochain& d);
Json to_json(const ConeCochain& x);
Json to_json(const FgAbelianGroup& g);

RatVector rat_vector_from_json(const Json& j);
Cochain cochain_from_json(const Json& j);
WhitneyForm form_from_json(const Json& j);
DiffCochain diff_cochain_from_json(const Json& j);
ConeCochain cone_cochain_from_json(const Json& j);

}  // namespace hexad
