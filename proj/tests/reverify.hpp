#pragma once

// Replays a faces counterexample: the recorded input must violate the recorded
// face under the maps that produced it.

#include <string>

#include "hexad/forms.hpp"
#include "hexad/hexagon.hpp"
#include "hexad/serialize.hpp"

namespace testing_support {

inline bool face_holds(const hexad::SimplicialComplex& x, const hexad::HexagonMaps& maps, const hexad::Json& ce) {
  using namespace hexad;
  const std::string face = ce.at("face").get<std::string>();
  const Json& in = ce.at("input");
  if (face == "R.a=d") {
    const WhitneyForm eta = form_from_json(in);
    return maps.R(maps.a(eta)) == exterior_derivative(x, eta);
  }
  if (face == "I.i=beta") {
    const ConeCochain z = cone_cochain_from_json(in);
    return maps.I(maps.i(z)) == maps.beta(z);
  }
  if (face == "i.b=a.iota") {
    const WhitneyForm w = form_from_json(in);
    return maps.i(maps.b(w)) == maps.a(maps.iota(w));
  }
  if (face == "ch.I=der.R") {
    const DiffCochain d = diff_cochain_from_json(in);
    return maps.ch(maps.I(d)) == maps.der(maps.R(d));
  }
  throw std::invalid_argument("unknown face " + face);
}

/// The counterexample breaks the face for `maps` and the face holds for the unmodified maps.
inline bool reverifies(const hexad::SimplicialComplex& x, const hexad::HexagonMaps& maps, const hexad::Json& ce) {
  return !face_holds(x, maps, ce) && face_holds(x, hexad::HexagonMaps(x), ce);
}

}  // namespace testing_support
