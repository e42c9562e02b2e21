#include "hexad/hexagon.hpp"

#include <stdexcept>

#include "hexad/cohomology.hpp"
#include "hexad/errors.hpp"
#include "hexad/linsolve.hpp"

namespace hexad {

std::string_view map_name(HexMap m) {
  switch (m) {
    case HexMap::I: return "I";
    case HexMap::R: return "R";
    case HexMap::Der: return "der";
    case HexMap::A: return "a";
    case HexMap::Ch: return "ch";
    case HexMap::Beta: return "beta";
    case HexMap::B: return "b";
    case HexMap::Iota: return "iota";
    case HexMap::Inc: return "i";
  }
  return "?";
}

CocyclePair HexagonMaps::I(const DiffCochain& x) const { return {x.c, sign(HexMap::I) * coboundary(*x_, x.T)}; }

WhitneyForm HexagonMaps::R(const DiffCochain& x) const { return sign(HexMap::R) * x.omega.value(); }

Cochain HexagonMaps::der(const WhitneyForm& w) const { return sign(HexMap::Der) * derham_cochain(w); }

DiffCochain HexagonMaps::a(const WhitneyForm& eta) const {
  const int k = eta.degree + 1;
  return DiffCochain{k, k, Cochain::zero(*x_, k, Ring::Integer), der(eta),
                     sign(HexMap::A) * exterior_derivative(*x_, eta)};
}

Cochain HexagonMaps::ch(const CocyclePair& p) const { return include_coefficients(p.c) + sign(HexMap::Ch) * p.t; }

CocyclePair HexagonMaps::beta(const ConeCochain& e) const {
  return {sign(HexMap::Beta) * -e.u, coboundary(*x_, e.v)};
}

ConeCochain HexagonMaps::b(const WhitneyForm& w) const {
  return ConeCochain{w.degree, Cochain::zero(*x_, w.degree + 1, Ring::Integer), sign(HexMap::B) * der(w)};
}

WhitneyForm HexagonMaps::iota(const WhitneyForm& w) const { return sign(HexMap::Iota) * w; }

DiffCochain HexagonMaps::i(const ConeCochain& e) const {
  const int k = e.degree + 1;
  return DiffCochain{k, k, sign(HexMap::Inc) * -e.u, e.v, WhitneyForm::zero(*x_, k)};
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

void require_form_fits(const SimplicialComplex& x, const WhitneyForm& w) {
  require(w.coefficients.size() == x.count(w.degree), "form does not fit the complex");
}

void require_diff_cocycle(const SimplicialComplex& x, const DiffCochain& d) {
  check_shape(x, d);
  require(d.degree == d.level, "expected a degree-k element of level k");
  require(is_cocycle(x, d), "not a differential cocycle");
}

bool rational_coboundary(const SimplicialComplex& x, const Cochain& t) {
  return rational_solve(to_rational(x.coboundary_matrix(t.degree() - 1)), t.values()).has_value();
}

void require_pair(const SimplicialComplex& x, const CocyclePair& p) {
  require(p.c.ring() == Ring::Integer && p.t.ring() == Ring::Rational, "expected an integral cocycle and a rational coboundary");
  require(p.c.degree() == p.t.degree(), "degree mismatch in (c, t)");
  check_fits(x, p.c);
  check_fits(x, p.t);
  require(coboundary(x, p.c).is_zero(), "c is not a cocycle");
  require(rational_coboundary(x, p.t), "t is not a rational coboundary");
}

DiffCochain witness_from_membership(const SimplicialComplex& x, const MixedSubgroup& s, const WhitneyForm& w,
                                    const MembershipResult& m) {
  const auto* wit = std::get_if<MembershipWitness>(&m);
  require(wit != nullptr, "form does not have integral periods");
  const int k = w.degree;
  RatVector c(x.count(k), Rational(0));
  for (std::size_t i = 0; i < s.lattice_gens.size(); ++i) c = add(c, scale(Rational(wit->lattice_coeffs[i]), s.lattice_gens[i]));
  // The space generators are d of the elementary (k-1)-cochains, so the space
  // coefficients are T itself.
  DiffCochain out{k, k, Cochain(k, Ring::Integer, c), Cochain(k - 1, Ring::Rational, wit->space_coeffs), w};
  if (!is_cocycle(x, out) || !(*out.omega == w)) throw std::logic_error("R-surjectivity witness failed to re-verify");
  return out;
}

}  // namespace

CocyclePair map_I(const SimplicialComplex& x, const DiffCochain& d) {
  require_diff_cocycle(x, d);
  return HexagonMaps(x).I(d);
}

WhitneyForm map_R(const SimplicialComplex& x, const DiffCochain& d) {
  require_diff_cocycle(x, d);
  return HexagonMaps(x).R(d);
}

DiffCochain map_a(const SimplicialComplex& x, const WhitneyForm& eta) {
  require_form_fits(x, eta);
  return HexagonMaps(x).a(eta);
}

DiffCochain map_i(const SimplicialComplex& x, const ConeCochain& e) {
  check_shape(x, e);
  require(is_cone_cocycle(x, e), "not a cone cocycle");
  return HexagonMaps(x).i(e);
}

Cochain map_ch(const SimplicialComplex& x, const CocyclePair& p) {
  require_pair(x, p);
  return HexagonMaps(x).ch(p);
}

CocyclePair map_beta(const SimplicialComplex& x, const ConeCochain& e) {
  check_shape(x, e);
  require(is_cone_cocycle(x, e), "not a cone cocycle");
  return HexagonMaps(x).beta(e);
}

ConeCochain map_b(const SimplicialComplex& x, const WhitneyForm& w) {
  require_form_fits(x, w);
  require(is_closed(x, w), "form is not closed");
  return HexagonMaps(x).b(w);
}

WhitneyForm map_iota(const SimplicialComplex& x, const WhitneyForm& w) {
  require_form_fits(x, w);
  require(is_closed(x, w), "form is not closed");
  return HexagonMaps(x).iota(w);
}

bool in_omega_integral(const SimplicialComplex& x, const WhitneyForm& w) {
  require_form_fits(x, w);
  return is_closed(x, w) && is_member(mixed_membership(derham_cochain(w).values(), integral_classes(x, w.degree)));
}

DiffCochain witness_R_surjective(const SimplicialComplex& x, const WhitneyForm& w) {
  require_form_fits(x, w);
  require(is_closed(x, w), "form is not closed");
  const MixedSubgroup s = integral_classes(x, w.degree);
  return witness_from_membership(x, s, w, mixed_membership(derham_cochain(w).values(), s));
}

DiffCochain witness_I_surjective(const SimplicialComplex& x, const Cochain& c, const Cochain& t) {
  require_pair(x, {c, t});
  const int k = c.degree();
  const auto T = rational_solve(to_rational(x.coboundary_matrix(k - 1)), t.values());
  DiffCochain out{k, k, c, Cochain(k - 1, Ring::Rational, *T), whitney(include_coefficients(c) + t)};
  if (!is_cocycle(x, out) || !(HexagonMaps(x).I(out) == CocyclePair{c, t}))
    throw std::logic_error("I-surjectivity witness failed to re-verify");
  return out;
}

DiffCochain witness_I_surjective_adjusted(const SimplicialComplex& x, const Cochain& c, const Cochain& t,
                                          const Cochain& noise) {
  require_pair(x, {c, t});
  const int k = c.degree();
  require(noise.degree() == k - 1 && noise.ring() == Ring::Rational, "noise must be a rational (k-1)-cochain");
  check_fits(x, noise);
  const auto T = rational_solve(to_rational(x.coboundary_matrix(k - 1)), t.values());
  const Cochain Tc(k - 1, Ring::Rational, *T);
  // A closed form in the class of j(c), then the exact correction.
  const WhitneyForm w0 = whitney(include_coefficients(c)) + exterior_derivative(x, whitney(noise));
  const Cochain defect = derham_cochain(w0) - include_coefficients(c) - coboundary(x, Tc);
  const WhitneyForm eta = find_primitive(x, defect);
  DiffCochain out{k, k, c, Tc, w0 - exterior_derivative(x, eta)};
  if (!is_cocycle(x, out) || !(HexagonMaps(x).I(out) == CocyclePair{c, t}))
    throw std::logic_error("adjusted I-surjectivity witness failed to re-verify");
  return out;
}

HexagonContext::HexagonContext(const SimplicialComplex& x, int k, std::uint64_t seed, std::size_t trials)
    : x_(&x),
      k_(k),
      seed_(seed),
      trials_(trials),
      integral_cocycles_((k >= 1 && k <= x.dimension() + 1) ? integral_cocycle_basis(x, k) : std::vector<IntVector>{}),
      cone_lifts_(integral_coboundary_preimage(x, k - 1)),
      closed_lower_(rational_cocycle_basis(x, k - 1)),
      dhat_b_(x, k),
      cone_b_(hexad::cone_coboundaries(x, k - 1)),
      omega_z_(integral_classes(x, k)),
      omega_z_lower_(integral_classes(x, k - 1)),
      int_b_(x.coboundary_matrix(k - 1)) {
  if (k < 1 || k > x.dimension() + 1)
    throw PreconditionError("degree " + std::to_string(k) + " outside 1.." + std::to_string(x.dimension() + 1));
  for (const auto& z : integral_cocycles_) {
    const Cochain c = Cochain::from_integers(k, z);
    lattice_.push_back(DiffCochain{k, k, c, Cochain::zero(x, k - 1, Ring::Rational), whitney(include_coefficients(c))});
  }
  for (std::size_t j = 0; j < x.count(k - 1); ++j) {
    const Cochain e = Cochain::elementary(x, k - 1, j, Ring::Rational);
    space_.push_back(DiffCochain{k, k, Cochain::zero(x, k, Ring::Integer), e, whitney(coboundary(x, e))});
  }
}

std::vector<ConeCochain> HexagonContext::cone_cocycle_generators() const {
  std::vector<ConeCochain> out;
  auto add_gen = [&](const RatVector& g) {
    const Cochain v(k_ - 1, Ring::Rational, g);
    out.push_back(ConeCochain{k_ - 1, Cochain(k_, Ring::Integer, coboundary(*x_, v).values()), v});
  };
  for (const auto& g : cone_lifts_.lattice_gens) add_gen(g);
  for (const auto& g : cone_lifts_.space_gens) add_gen(g);
  return out;
}

std::vector<WhitneyForm> HexagonContext::closed_lower_forms() const {
  std::vector<WhitneyForm> out;
  for (const auto& g : closed_lower_) out.push_back(WhitneyForm{k_ - 1, g});
  return out;
}

DiffCochain HexagonContext::random_cocycle(Sampler& rng) const {
  RatVector c(x_->count(k_), Rational(0));
  for (const auto& z : integral_cocycles_) c = add(c, to_rational(scale(rng.integer(), z)));
  const Cochain cc(k_, Ring::Integer, c);
  const Cochain T = rng.rational_cochain(*x_, k_ - 1);
  return DiffCochain{k_, k_, cc, T, whitney(include_coefficients(cc) + coboundary(*x_, T))};
}

ConeCochain HexagonContext::random_cone_cocycle(Sampler& rng) const {
  const Cochain v(k_ - 1, Ring::Rational, rng.element_of(cone_lifts_));
  return ConeCochain{k_ - 1, Cochain(k_, Ring::Integer, coboundary(*x_, v).values()), v};
}

WhitneyForm HexagonContext::random_closed_lower_form(Sampler& rng) const {
  RatVector w(x_->count(k_ - 1), Rational(0));
  for (const auto& g : closed_lower_) w = add(w, scale(rng.rational(), g));
  return WhitneyForm{k_ - 1, w};
}

WhitneyForm HexagonContext::random_integral_form(Sampler& rng) const {
  return WhitneyForm{k_, rng.element_of(omega_z_.subgroup())};
}

DiffCochain HexagonContext::witness_R(const WhitneyForm& w) const {
  require_form_fits(*x_, w);
  require(w.degree == k_ && is_closed(*x_, w), "form is not a closed k-form");
  return witness_from_membership(*x_, omega_z_.subgroup(), w, omega_z_.test(w.coefficients));
}

bool HexagonContext::integral_class_is_zero(const Cochain& c) const {
  return std::holds_alternative<IntVector>(int_b_.solve(c.integer_values()));
}

bool HexagonContext::rational_is_coboundary(const Cochain& t) const { return rational_coboundary(*x_, t); }

}  // namespace hexad
