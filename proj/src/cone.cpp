#include "hexad/cone.hpp"

#include <sstream>
#include <stdexcept>

#include "hexad/cohomology.hpp"
#include "hexad/linsolve.hpp"
#include "hexad/sampling.hpp"
#include "hexad/serialize.hpp"

namespace hexad {

ConeCochain ConeCochain::zero(const SimplicialComplex& x, int degree) {
  return ConeCochain{degree, Cochain::zero(x, degree + 1, Ring::Integer), Cochain::zero(x, degree, Ring::Rational)};
}

ConeCochain ConeCochain::operator-() const { return ConeCochain{degree, -u, -v}; }

ConeCochain operator+(const ConeCochain& a, const ConeCochain& b) {
  if (a.degree != b.degree) throw std::invalid_argument("cone cochain arithmetic: degree mismatch");
  return ConeCochain{a.degree, a.u + b.u, a.v + b.v};
}

ConeCochain operator-(const ConeCochain& a, const ConeCochain& b) { return a + (-b); }

std::string to_string(const ConeCochain& x) {
  std::ostringstream out;
  out << "cone^" << x.degree << "(u=" << to_string(x.u) << ", v=" << to_string(x.v) << ")";
  return out.str();
}

void check_shape(const SimplicialComplex& x, const ConeCochain& e) {
  if (e.u.degree() != e.degree + 1 || e.u.ring() != Ring::Integer)
    throw std::invalid_argument("cone cochain: u must be an integer cochain of degree k+1");
  if (e.v.degree() != e.degree || e.v.ring() != Ring::Rational)
    throw std::invalid_argument("cone cochain: v must be a rational cochain of degree k");
  check_fits(x, e.u);
  check_fits(x, e.v);
}

ConeCochain delta_cone(const SimplicialComplex& x, const ConeCochain& e) {
  check_shape(x, e);
  return ConeCochain{e.degree + 1, -coboundary(x, e.u), coboundary(x, e.v) - include_coefficients(e.u)};
}

bool is_cone_cocycle(const SimplicialComplex& x, const ConeCochain& e) {
  const ConeCochain d = delta_cone(x, e);
  return d.u.is_zero() && d.v.is_zero();
}

ConeCochain alpha_cone(const SimplicialComplex& x, const Cochain& c) {
  if (c.ring() != Ring::Rational) throw std::invalid_argument("alpha: expected a rational cochain");
  check_fits(x, c);
  return ConeCochain{c.degree(), Cochain::zero(x, c.degree() + 1, Ring::Integer), c};
}

Cochain gamma_cone(const ConeCochain& e) { return -e.u; }

Cochain cone_to_qmodz(const ConeCochain& e) { return reduce_mod_one(e.v); }

RatVector stacked(const ConeCochain& e) { return stack(e.u.values(), e.v.values()); }

MixedSubgroup cone_coboundaries(const SimplicialComplex& x, int k) {
  // C^{k-1}(j) = C^k(Z) + C^{k-1}(Q); generators map to (-de, -e) and (0, df).
  MixedSubgroup s;
  s.ambient_dim = x.count(k + 1) + x.count(k);
  for (std::size_t i = 0; i < x.count(k); ++i) {
    const Cochain e = Cochain::elementary(x, k, i, Ring::Integer);
    s.lattice_gens.push_back(stack((-coboundary(x, e)).values(), (-e).values()));
  }
  const RatVector zeros(x.count(k + 1), Rational(0));
  for (const auto& g : coboundary_generators(x, k)) s.space_gens.push_back(stack(zeros, g));
  return s;
}

MixedSubgroup qmodz_coboundary_lifts(const SimplicialComplex& x, int k) {
  MixedSubgroup s;
  s.ambient_dim = x.count(k);
  for (std::size_t i = 0; i < s.ambient_dim; ++i) s.lattice_gens.push_back(Cochain::elementary(x, k, i, Ring::Rational).values());
  s.space_gens = coboundary_generators(x, k);
  return s;
}

namespace {

Cochain rational(int degree, RatVector v) { return Cochain(degree, Ring::Rational, std::move(v)); }

// The cone cocycle (dv, v) for v with integral coboundary.
ConeCochain cocycle_from(const SimplicialComplex& x, const Cochain& v) {
  const Cochain dv = coboundary(x, v);
  return ConeCochain{v.degree(), Cochain(v.degree() + 1, Ring::Integer, dv.values()), v};
}

// v in [0, 1) representing a Q/Z cochain.
Cochain representative(const Cochain& c) { return Cochain(c.degree(), Ring::Rational, c.values()); }

std::vector<RatVector> all_generators(const MixedSubgroup& s) {
  std::vector<RatVector> out = s.lattice_gens;
  out.insert(out.end(), s.space_gens.begin(), s.space_gens.end());
  return out;
}

Json membership_payload(const RatVector& x, const MembershipResult& r) {
  Json j = Json::object();
  j["vector"] = to_json(x);
  if (const auto* c = std::get_if<NonMembershipCertificate>(&r)) j["certificate"] = to_json(c->functional);
  return j;
}

}  // namespace

CheckReport cone_comparison(const SimplicialComplex& x, int k, std::size_t trials, std::uint64_t seed) {
  CheckReport r("cone_comparison", derive_seed(seed, "cone_comparison"));
  Sampler rng(r.seed);
  r.details["degree"] = k;
  if (k < 0) {
    r.status = Status::NoCounterexample;
    return r;
  }
  const MixedSubgroup cocycle_lifts = integral_coboundary_preimage(x, k);
  const PreparedSubgroup qmodz_b(qmodz_coboundary_lifts(x, k));
  const PreparedSubgroup cone_b(cone_coboundaries(x, k));
  r.details["qmodz_cohomology"] = to_string(qmodz_cohomology(x, k));

  // Well-defined: cone coboundaries map to Q/Z coboundaries.
  std::vector<ConeCochain> coboundaries;
  for (const auto& g : all_generators(cone_b.subgroup())) {
    ConeCochain e{k, Cochain(k + 1, Ring::Integer, RatVector(g.begin(), g.begin() + x.count(k + 1))),
                  rational(k, RatVector(g.begin() + x.count(k + 1), g.end()))};
    coboundaries.push_back(e);
  }
  for (std::size_t t = 0; t < trials; ++t) {
    ConeCochain y{k - 1, rng.integer_cochain(x, k), rng.rational_cochain(x, k - 1)};
    coboundaries.push_back(delta_cone(x, y));
  }
  for (const auto& b : coboundaries) {
    const RatVector lift = representative(cone_to_qmodz(b)).values();
    const MembershipResult m = qmodz_b.test(lift);
    if (!r.expect(is_member(m), "image of a cone coboundary is not a Q/Z coboundary", {{"element", to_json(b)}})) break;
    r.witness();
  }

  // Surjective: every Q/Z cocycle has a cone cocycle lift with the same image.
  std::vector<Cochain> targets;
  for (const auto& g : all_generators(cocycle_lifts)) targets.push_back(reduce_mod_one(rational(k, g)));
  for (std::size_t t = 0; t < trials; ++t) targets.push_back(reduce_mod_one(rational(k, rng.element_of(cocycle_lifts))));
  std::size_t nontrivial = 0;
  for (const auto& target : targets) {
    const Cochain v = representative(target);
    if (!r.expect(is_integral(coboundary(x, v).values()), "sampled target is not a Q/Z cocycle", {{"target", to_json(target)}}))
      break;
    const ConeCochain lift = cocycle_from(x, v);
    if (!r.expect(is_cone_cocycle(x, lift) && cone_to_qmodz(lift) == target, "cone lift does not reproduce the target",
                  {{"target", to_json(target)}, {"lift", to_json(lift)}}))
      break;
    r.witness();
    // A target outside the Q/Z coboundaries needs a lift outside the cone coboundaries.
    if (!is_member(qmodz_b.test(v.values()))) {
      ++nontrivial;
      const MembershipResult m = cone_b.test(stacked(lift));
      if (!r.expect(!is_member(m) && verify_certificate(stacked(lift), cone_b.subgroup(), std::get<NonMembershipCertificate>(m)),
                    "nontrivial Q/Z class lifts to a cone coboundary", {{"lift", to_json(lift)}}))
        break;
    }
  }
  r.details["nontrivial_targets"] = nontrivial;

  // Injective: cone cocycles mapping to Q/Z coboundaries are cone coboundaries.
  std::vector<Cochain> kernel;
  for (const auto& g : all_generators(qmodz_b.subgroup())) kernel.push_back(rational(k, g));
  for (std::size_t t = 0; t < trials; ++t) kernel.push_back(rational(k, rng.element_of(qmodz_b.subgroup())));
  for (const auto& v : kernel) {
    const ConeCochain z = cocycle_from(x, v);
    const RatVector s = stacked(z);
    const MembershipResult m = cone_b.test(s);
    if (!r.expect(is_member(m) && verify_witness(s, cone_b.subgroup(), std::get<MembershipWitness>(m)),
                  "cone cocycle in the kernel is not a cone coboundary", membership_payload(s, m)))
      break;
    r.witness();
  }
  return r;
}

CheckReport les_exactness(const SimplicialComplex& x, int k, std::size_t trials, std::uint64_t seed) {
  CheckReport r("les_exactness", derive_seed(seed, "les_exactness"));
  Sampler rng(r.seed);
  r.details["degree"] = k;
  if (k < 0) {
    r.status = Status::NoCounterexample;
    return r;
  }
  const IntMatrix& dk = x.coboundary_matrix(k);
  const RatMatrix dq = to_rational(dk);
  const PreparedSubgroup cone_b(cone_coboundaries(x, k));

  // Composites vanish: gamma(alpha(c)) = 0 and j(gamma(z)) is a rational coboundary.
  for (std::size_t i = 0; i < x.count(k); ++i) {
    const Cochain e = Cochain::elementary(x, k, i, Ring::Rational);
    if (!r.expect(gamma_cone(alpha_cone(x, e)).is_zero(), "gamma o alpha is nonzero", {{"cochain", to_json(e)}})) return r;
    r.witness();
  }
  for (const auto& g : rational_cocycle_basis(x, k)) {
    if (!r.expect(is_cone_cocycle(x, alpha_cone(x, rational(k, g))), "alpha of a cocycle is not a cone cocycle",
                  {{"cochain", to_json(rational(k, g))}}))
      return r;
    r.witness();
  }

  // Exactness at H^k(cone): a cone cocycle with gamma-image an integral
  // coboundary differs from alpha(c) by a cone coboundary.
  const std::vector<RatVector> rational_cocycles = rational_cocycle_basis(x, k);
  for (std::size_t t = 0; t < trials; ++t) {
    RatVector v(x.count(k), Rational(0));
    for (const auto& g : rational_cocycles) v = add(v, scale(rng.rational(), g));
    v = add(v, to_rational(rng.integers(x.count(k))));
    const ConeCochain z = cocycle_from(x, rational(k, v));
    // d w = -u with w integral
    const auto w = integer_solve(dk, to_integer(scale(Rational(-1), z.u.values())));
    if (!r.expect(w.has_value(), "gamma-image is an integral coboundary but no integral primitive was found",
                  {{"element", to_json(z)}}))
      return r;
    const Cochain wq = rational(k, to_rational(*w));
    const Cochain c = z.v + wq;
    const ConeCochain diff = z - alpha_cone(x, c);
    const ConeCochain expected = delta_cone(x, ConeCochain{k - 1, Cochain::from_integers(k, *w), Cochain::zero(x, k - 1, Ring::Rational)});
    if (!r.expect(coboundary(x, c).is_zero() && diff == expected, "alpha preimage witness fails",
                  {{"element", to_json(z)}, {"c", to_json(c)}}))
      return r;
    r.witness();
  }

  // Exactness at H^{k+1}(Z): integral cocycles that are rational coboundaries
  // are gamma-images; report how many are nontrivial integral classes.
  const MixedSubgroup lifts = integral_coboundary_preimage(x, k);
  std::vector<RatVector> sources = all_generators(lifts);
  for (std::size_t t = 0; t < trials; ++t) sources.push_back(rng.element_of(lifts));
  const IntegerSolver integral_b(dk);
  std::size_t nontrivial = 0;
  for (const auto& y : sources) {
    const IntVector u = to_integer(dq.apply(y));
    const auto v = rational_solve(dq, to_rational(u));
    if (!r.expect(v.has_value(), "rational primitive not found", {{"u", to_json(u)}})) return r;
    const ConeCochain pre{k, Cochain::from_integers(k + 1, scale(Integer(-1), u)), rational(k, scale(Rational(-1), *v))};
    if (!r.expect(is_cone_cocycle(x, pre) && gamma_cone(pre) == Cochain::from_integers(k + 1, u),
                  "gamma preimage witness fails", {{"u", to_json(u)}, {"preimage", to_json(pre)}}))
      return r;
    r.witness();
    const auto solved = integral_b.solve(u);
    if (const auto* ob = std::get_if<LatticeObstruction>(&solved)) {
      if (!r.expect(verify_obstruction(dk, u, *ob), "obstruction for a nontrivial gamma-image does not verify",
                    {{"u", to_json(u)}}))
        return r;
      ++nontrivial;
      const MembershipResult m = cone_b.test(stacked(pre));
      if (!r.expect(!is_member(m), "nontrivial gamma-image has a trivial cone preimage", {{"preimage", to_json(pre)}})) return r;
    }
  }
  r.details["nontrivial_gamma_images"] = nontrivial;
  return r;
}

CheckReport cone_differential_squared(const SimplicialComplex& x, int k, std::size_t trials, std::uint64_t seed) {
  CheckReport r("cone_differential_squared", derive_seed(seed, "cone_differential_squared"));
  Sampler rng(r.seed);
  std::vector<ConeCochain> samples;
  for (std::size_t i = 0; i < x.count(k + 1); ++i) {
    ConeCochain e = ConeCochain::zero(x, k);
    e.u = Cochain::elementary(x, k + 1, i, Ring::Integer);
    samples.push_back(e);
  }
  for (std::size_t i = 0; i < x.count(k); ++i) {
    ConeCochain e = ConeCochain::zero(x, k);
    e.v = Cochain::elementary(x, k, i, Ring::Rational);
    samples.push_back(e);
  }
  for (std::size_t t = 0; t < trials; ++t)
    samples.push_back(ConeCochain{k, rng.integer_cochain(x, k + 1), rng.rational_cochain(x, k)});
  for (const auto& e : samples) {
    const ConeCochain dd = delta_cone(x, delta_cone(x, e));
    if (!r.expect(dd.u.is_zero() && dd.v.is_zero(), "delta_j squared is nonzero", {{"element", to_json(e)}})) break;
    r.witness();
  }
  return r;
}

}  // namespace hexad
