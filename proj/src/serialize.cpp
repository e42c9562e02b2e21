#include "hexad/serialize.hpp"

#include <stdexcept>

namespace hexad {

Json to_json(const RatVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json to_json(const IntVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json to_json(const Chain& c) { return Json{{"degree", c.degree}, {"coeffs", to_json(c.coeffs)}}; }

Json to_json(const Cochain& c) {
  return Json{{"degree", c.degree()}, {"ring", std::string(ring_name(c.ring()))}, {"values", to_json(c.values())}};
}

Json to_json(const WhitneyForm& w) { return Json{{"degree", w.degree}, {"coefficients", to_json(w.coefficients)}}; }

Json to_json(const DiffCochain& d) {
  Json j{{"level", d.level}, {"degree", d.degree}, {"c", to_json(d.c)}, {"T", to_json(d.T)}};
  j["omega"] = d.omega ? to_json(*d.omega) : Json(nullptr);
  return j;
}

Json to_json(const ConeCochain& x) { return Json{{"degree", x.degree}, {"u", to_json(x.u)}, {"v", to_json(x.v)}}; }

Json to_json(const FgAbelianGroup& g) { return to_string(g); }

RatVector rat_vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  RatVector v;
  for (const auto& e : j) {
    if (e.is_string())
      v.push_back(parse_rational(e.get<std::string>()));
    else if (e.is_number_integer())
      v.push_back(Rational(e.get<long>()));
    else
      throw std::invalid_argument("expected a rational string or an integer");
  }
  return v;
}

Cochain cochain_from_json(const Json& j) {
  return Cochain(j.at("degree").get<int>(), parse_ring(j.at("ring").get<std::string>()), rat_vector_from_json(j.at("values")));
}

WhitneyForm form_from_json(const Json& j) {
  return WhitneyForm{j.at("degree").get<int>(), rat_vector_from_json(j.at("coefficients"))};
}

DiffCochain diff_cochain_from_json(const Json& j) {
  DiffCochain d;
  d.level = j.at("level").get<int>();
  d.degree = j.at("degree").get<int>();
  d.c = cochain_from_json(j.at("c"));
  d.T = cochain_from_json(j.at("T"));
  if (j.contains("omega") && !j.at("omega").is_null()) d.omega = form_from_json(j.at("omega"));
  return d;
}

ConeCochain cone_cochain_from_json(const Json& j) {
  return ConeCochain{j.at("degree").get<int>(), cochain_from_json(j.at("u")), cochain_from_json(j.at("v"))};
}

}  // namespace hexad
