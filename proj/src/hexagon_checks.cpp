#include <algorithm>

#include "hexad/cohomology.hpp"
#include "hexad/errors.hpp"
#include "hexad/hexagon.hpp"
#include "hexad/linsolve.hpp"
#include "hexad/serialize.hpp"

namespace hexad {

namespace {

std::size_t sample_count(const HexagonContext& ctx) { return std::max<std::size_t>(ctx.trials(), 25); }

CheckReport start(const HexagonContext& ctx, std::string name) {
  CheckReport r(name, derive_seed(ctx.seed(), name));
  r.details["degree"] = ctx.degree();
  return r;
}

Json pair_json(const CocyclePair& p) { return Json{{"c", to_json(p.c)}, {"t", to_json(p.t)}}; }

Json sides(std::string_view face, Json input, Json lhs, Json rhs) {
  return Json{{"face", std::string(face)}, {"input", std::move(input)}, {"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}};
}

// Generators of Bhat(k)^k: dhat(e, 0) for integral e and dhat(0, f) for rational f.
std::vector<DiffCochain> dhat_coboundary_generators(const HexagonContext& ctx) {
  const auto& x = ctx.complex();
  const int k = ctx.degree();
  std::vector<DiffCochain> out;
  for (std::size_t j = 0; j < x.count(k - 1); ++j) {
    DiffCochain y = DiffCochain::zero(x, k, k - 1);
    y.c = Cochain::elementary(x, k - 1, j, Ring::Integer);
    out.push_back(dhat(x, y));
  }
  for (std::size_t j = 0; j < x.count(k - 2); ++j) {
    DiffCochain y = DiffCochain::zero(x, k, k - 1);
    y.T = Cochain::elementary(x, k - 2, j, Ring::Rational);
    out.push_back(dhat(x, y));
  }
  return out;
}

DiffCochain random_dhat_coboundary(const HexagonContext& ctx, Sampler& rng) {
  const auto& x = ctx.complex();
  const int k = ctx.degree();
  DiffCochain y = DiffCochain::zero(x, k, k - 1);
  y.c = rng.integer_cochain(x, k - 1);
  y.T = rng.rational_cochain(x, k - 2);
  return dhat(x, y);
}

ConeCochain split_cone(const SimplicialComplex& x, int degree, const RatVector& s) {
  const std::size_t n = x.count(degree + 1);
  return ConeCochain{degree, Cochain(degree + 1, Ring::Integer, RatVector(s.begin(), s.begin() + n)),
                     Cochain(degree, Ring::Rational, RatVector(s.begin() + n, s.end()))};
}

std::vector<WhitneyForm> subgroup_forms(int degree, const MixedSubgroup& s) {
  std::vector<WhitneyForm> out;
  for (const auto& g : s.lattice_gens) out.push_back(WhitneyForm{degree, g});
  for (const auto& g : s.space_gens) out.push_back(WhitneyForm{degree, g});
  return out;
}

RatVector flatten(const DiffCochain& d) {
  RatVector v = stack(d.c.values(), d.T.values());
  if (d.omega) v = stack(v, d.omega->coefficients);
  return v;
}

std::vector<Chain> cycles_of(const HomologyBasis& h) {
  std::vector<Chain> out = h.free_cycles;
  out.insert(out.end(), h.torsion_cycles.begin(), h.torsion_cycles.end());
  return out;
}

// Exactness at the form node: a(eta) is a coboundary exactly when eta is a
// closed form with integral periods.
void form_node_exactness(const HexagonContext& ctx, const HexagonMaps& maps, CheckReport& r, Sampler& rng) {
  const auto& x = ctx.complex();
  const int k = ctx.degree();
  std::vector<WhitneyForm> etas = subgroup_forms(k - 1, ctx.integral_lower_forms().subgroup());
  for (const auto& g : ctx.integral_lower_forms().subgroup().lattice_gens) etas.push_back(WhitneyForm{k - 1, scale(make_rational(1, 2), g)});
  for (std::size_t t = 0; t < ctx.trials(); ++t) {
    etas.push_back(WhitneyForm{k - 1, rng.element_of(ctx.integral_lower_forms().subgroup())});
    etas.push_back(ctx.random_closed_lower_form(rng));
    etas.push_back(rng.form(x, k - 1));
  }
  std::size_t dies = 0, survives = 0;
  for (const auto& eta : etas) {
    const bool integral = is_closed(x, eta) && is_member(ctx.integral_lower_forms().test(eta.coefficients));
    const DiffCochain image = maps.a(eta);
    std::optional<DiffCochain> pre;
    if (is_cocycle(x, image)) pre = ctx.dhat_coboundaries().preimage(image);
    if (!r.expect(integral == pre.has_value(), "a(eta) is a coboundary iff eta has integral periods",
                  {{"eta", to_json(eta)}, {"integral_periods", integral}, {"coboundary", pre.has_value()}}))
      return;
    if (pre && !r.expect(dhat(x, *pre) == image, "coboundary witness for a(eta) does not re-verify", {{"eta", to_json(eta)}}))
      return;
    (integral ? dies : survives)++;
    r.witness();
  }
  r.details["forms_dying_under_a"] = dies;
  r.details["forms_surviving_a"] = survives;
}

}  // namespace

CheckReport check_faces(const HexagonContext& ctx, const HexagonMaps& maps) {
  CheckReport r = start(ctx, "faces");
  Sampler rng(r.seed);
  const auto& x = ctx.complex();
  const int k = ctx.degree();

  // R o a = d
  std::vector<WhitneyForm> etas;
  for (std::size_t j = 0; j < x.count(k - 1); ++j) etas.push_back(WhitneyForm::elementary(x, k - 1, j));
  for (std::size_t t = 0; t < ctx.trials(); ++t) etas.push_back(rng.form(x, k - 1));
  for (const auto& eta : etas) {
    const WhitneyForm lhs = maps.R(maps.a(eta));
    const WhitneyForm rhs = exterior_derivative(x, eta);
    if (!r.expect(lhs == rhs, "R o a != d", sides("R.a=d", to_json(eta), to_json(lhs), to_json(rhs)))) return r;
    r.witness();
  }

  // I o i = beta
  std::vector<ConeCochain> cone = ctx.cone_cocycle_generators();
  for (std::size_t t = 0; t < ctx.trials(); ++t) cone.push_back(ctx.random_cone_cocycle(rng));
  for (const auto& z : cone) {
    const CocyclePair lhs = maps.I(maps.i(z));
    const CocyclePair rhs = maps.beta(z);
    if (!r.expect(lhs == rhs, "I o i != beta", sides("I.i=beta", to_json(z), pair_json(lhs), pair_json(rhs)))) return r;
    r.witness();
  }

  // i o b = a o iota
  std::vector<WhitneyForm> closed = ctx.closed_lower_forms();
  for (std::size_t t = 0; t < ctx.trials(); ++t) closed.push_back(ctx.random_closed_lower_form(rng));
  for (const auto& w : closed) {
    const DiffCochain lhs = maps.i(maps.b(w));
    const DiffCochain rhs = maps.a(maps.iota(w));
    if (!r.expect(lhs == rhs, "i o b != a o iota", sides("i.b=a.iota", to_json(w), to_json(lhs), to_json(rhs)))) return r;
    r.witness();
  }

  // ch o I = der o R
  std::vector<DiffCochain> cocycles = ctx.cocycle_lattice();
  cocycles.insert(cocycles.end(), ctx.cocycle_space().begin(), ctx.cocycle_space().end());
  for (std::size_t t = 0; t < ctx.trials(); ++t) cocycles.push_back(ctx.random_cocycle(rng));
  for (const auto& d : cocycles) {
    const Cochain lhs = maps.ch(maps.I(d));
    const Cochain rhs = maps.der(maps.R(d));
    if (!r.expect(lhs == rhs, "ch o I != der o R", sides("ch.I=der.R", to_json(d), to_json(lhs), to_json(rhs)))) return r;
    r.witness();
  }
  return r;
}

CheckReport check_main_diagonal(const HexagonContext& ctx, const HexagonMaps& maps) {
  CheckReport r = start(ctx, "main_diagonal");
  Sampler rng(r.seed);
  const auto& x = ctx.complex();
  const int k = ctx.degree();
  const HexagonMaps plain(x);

  // i lands in Zhat and R o i = 0 on a spanning set.
  for (const auto& z : ctx.cone_cocycle_generators()) {
    const DiffCochain d = maps.i(z);
    if (!r.expect(is_cocycle(x, d), "i(z) is not a differential cocycle", {{"input", to_json(z)}, {"image", to_json(d)}})) return r;
    if (!r.expect(maps.R(d).is_zero(), "R o i != 0", {{"input", to_json(z)}, {"image", to_json(d)}})) return r;
    r.witness();
  }

  // ker R is contained in im i: kernel samples receive the preimage (-c, T).
  const std::size_t n = sample_count(ctx);
  std::size_t nonzero = 0;
  for (std::size_t t = 0; t < n; ++t) {
    DiffCochain d;
    switch (t % 3) {
      case 0: d = plain.a(ctx.random_closed_lower_form(rng)); break;
      case 1: {
        const ConeCochain z = ctx.random_cone_cocycle(rng);
        d = DiffCochain{k, k, -z.u, z.v, WhitneyForm::zero(x, k)};
        break;
      }
      default: {
        const DiffCochain y = ctx.random_cocycle(rng);
        d = y - ctx.witness_R(plain.R(y));
      }
    }
    if (!r.expect(is_cocycle(x, d) && plain.R(d).is_zero(), "kernel sample is not in ker R", {{"sample", to_json(d)}})) return r;
    const ConeCochain pre{k - 1, -d.c, d.T};
    if (!r.expect(is_cone_cocycle(x, pre) && maps.i(pre) == d, "kernel element of R has no i-preimage",
                  {{"sample", to_json(d)}, {"preimage", to_json(pre)}, {"image", to_json(maps.i(pre))}}))
      return r;
    if (!d.is_zero()) ++nonzero;
    r.witness();
  }
  r.details["kernel_samples"] = n;
  r.details["nonzero_kernel_samples"] = nonzero;

  // Injectivity of i on the whole cone cochain group and of a on (k-1)-forms.
  std::vector<RatVector> i_cols;
  for (std::size_t j = 0; j < x.count(k); ++j) {
    ConeCochain e = ConeCochain::zero(x, k - 1);
    e.u = Cochain::elementary(x, k, j, Ring::Integer);
    i_cols.push_back(flatten(maps.i(e)));
  }
  for (std::size_t j = 0; j < x.count(k - 1); ++j) {
    ConeCochain e = ConeCochain::zero(x, k - 1);
    e.v = Cochain::elementary(x, k - 1, j, Ring::Rational);
    i_cols.push_back(flatten(maps.i(e)));
  }
  std::vector<RatVector> a_cols;
  for (std::size_t j = 0; j < x.count(k - 1); ++j) a_cols.push_back(flatten(maps.a(WhitneyForm::elementary(x, k - 1, j))));
  const std::size_t rows = x.count(k) + x.count(k - 1) + x.count(k);
  const std::size_t i_kernel = i_cols.size() - (i_cols.empty() ? 0 : rank(RatMatrix::from_columns(rows, i_cols)));
  const std::size_t a_kernel = a_cols.size() - (a_cols.empty() ? 0 : rank(RatMatrix::from_columns(rows, a_cols)));
  r.details["i_kernel_dimension"] = i_kernel;
  r.details["a_kernel_dimension"] = a_kernel;
  r.expect(i_kernel == 0, "i has a nonzero kernel");
  r.expect(a_kernel == 0, "a has a nonzero kernel");
  return r;
}

CheckReport check_surjectivity_witnesses(const HexagonContext& ctx, const HexagonMaps& maps) {
  CheckReport r = start(ctx, "surjectivity_witnesses");
  Sampler rng(r.seed);
  const auto& x = ctx.complex();
  const int k = ctx.degree();
  const std::size_t n = sample_count(ctx);

  std::vector<WhitneyForm> forms = subgroup_forms(k, ctx.integral_forms().subgroup());
  for (std::size_t t = 0; t < n; ++t) forms.push_back(ctx.random_integral_form(rng));
  for (const auto& w : forms) {
    try {
      const DiffCochain d = ctx.witness_R(w);
      if (!r.expect(is_cocycle(x, d) && maps.R(d) == w, "R-witness does not map to the target",
                    {{"target", to_json(w)}, {"witness", to_json(d)}}))
        return r;
    } catch (const std::exception& e) {
      r.fail(e.what(), {{"target", to_json(w)}});
      return r;
    }
    r.witness();
  }

  std::vector<CocyclePair> targets;
  for (const auto& d : ctx.cocycle_lattice()) targets.push_back({d.c, Cochain::zero(x, k, Ring::Rational)});
  for (const auto& d : ctx.cocycle_space()) targets.push_back({Cochain::zero(x, k, Ring::Integer), coboundary(x, d.T)});
  for (std::size_t t = 0; t < n; ++t) {
    const DiffCochain d = ctx.random_cocycle(rng);
    targets.push_back({d.c, coboundary(x, rng.rational_cochain(x, k - 1))});
  }
  for (const auto& p : targets) {
    try {
      const DiffCochain direct = witness_I_surjective(x, p.c, p.t);
      const DiffCochain adjusted = witness_I_surjective_adjusted(x, p.c, p.t, rng.rational_cochain(x, k - 1));
      const bool ok = is_cocycle(x, direct) && is_cocycle(x, adjusted) && maps.I(direct) == p && maps.I(adjusted) == p;
      if (!r.expect(ok, "I-witness does not map to the target",
                    {{"target", pair_json(p)}, {"direct", to_json(direct)}, {"adjusted", to_json(adjusted)}}))
        return r;
    } catch (const std::exception& e) {
      r.fail(e.what(), {{"target", pair_json(p)}});
      return r;
    }
    r.witness();
  }
  r.details["R_targets"] = forms.size();
  r.details["I_targets"] = targets.size();
  return r;
}

CheckReport check_induced_hexagon(const HexagonContext& ctx, const HexagonMaps& maps) {
  CheckReport r = start(ctx, "induced_hexagon");
  Sampler rng(r.seed);
  const auto& x = ctx.complex();
  const int k = ctx.degree();
  const HexagonMaps plain(x);
  const auto& solver = ctx.dhat_coboundaries();
  r.details["H^k(Z)"] = to_string(integral_cohomology(x, k));
  r.details["H^{k-1}(Q/Z)"] = to_string(qmodz_cohomology(x, k - 1));

  // Well-definedness on generators.
  for (const auto& g : dhat_coboundary_generators(ctx)) {
    if (!r.expect(maps.R(g).is_zero(), "R does not vanish on a coboundary", {{"coboundary", to_json(g)}})) return r;
    const CocyclePair p = maps.I(g);
    if (!r.expect(ctx.integral_class_is_zero(p.c) && ctx.rational_is_coboundary(p.t), "I does not send a coboundary into B x B",
                  {{"coboundary", to_json(g)}, {"image", pair_json(p)}}))
      return r;
    r.witness();
  }
  for (const auto& eta : subgroup_forms(k - 1, ctx.integral_lower_forms().subgroup())) {
    if (!r.expect(solver.preimage(maps.a(eta)).has_value(), "a of an integral-period form is not a coboundary",
                  {{"eta", to_json(eta)}}))
      return r;
    r.witness();
  }
  {
    const MixedSubgroup& cb = ctx.cone_coboundaries().subgroup();
    std::vector<RatVector> gens = cb.lattice_gens;
    gens.insert(gens.end(), cb.space_gens.begin(), cb.space_gens.end());
    for (const auto& g : gens) {
      const ConeCochain z = split_cone(x, k - 1, g);
      if (!r.expect(solver.preimage(maps.i(z)).has_value(), "i of a cone coboundary is not a coboundary", {{"input", to_json(z)}}))
        return r;
      r.witness();
    }
  }

  // First diagonal: H^{k-1}(Q/Z) -> Hhat -> Omega_Z.
  std::vector<ConeCochain> cone = ctx.cone_cocycle_generators();
  for (std::size_t t = 0; t < ctx.trials(); ++t) cone.push_back(ctx.random_cone_cocycle(rng));
  std::size_t nontrivial_cone = 0;
  for (const auto& z : cone) {
    const DiffCochain d = maps.i(z);
    const bool trivial_hat = is_cocycle(x, d) && solver.preimage(d).has_value();
    const bool trivial_cone = is_member(ctx.cone_coboundaries().test(stacked(z)));
    if (!r.expect(trivial_hat == trivial_cone, "induced i is not injective or not well defined",
                  {{"input", to_json(z)}, {"image_is_coboundary", trivial_hat}, {"input_is_coboundary", trivial_cone}}))
      return r;
    if (!trivial_cone) ++nontrivial_cone;
    r.witness();
  }
  r.details["nontrivial_cone_classes"] = nontrivial_cone;
  for (std::size_t t = 0; t < ctx.trials(); ++t) {
    const DiffCochain y = ctx.random_cocycle(rng);
    const DiffCochain d = y - ctx.witness_R(plain.R(y)) + random_dhat_coboundary(ctx, rng);
    const ConeCochain pre{k - 1, -d.c, d.T};
    if (!r.expect(is_cone_cocycle(x, pre) && maps.i(pre) == d, "class in ker R is not in im i", {{"sample", to_json(d)}})) return r;
    const WhitneyForm w = ctx.random_integral_form(rng);
    if (!r.expect(maps.R(ctx.witness_R(w)) == w, "induced R is not surjective", {{"target", to_json(w)}})) return r;
    r.witness(2);
  }

  // Second diagonal: Omega^{k-1}/Omega_Z -> Hhat -> H^k(Z).
  for (std::size_t j = 0; j < x.count(k - 1); ++j) {
    const WhitneyForm eta = WhitneyForm::elementary(x, k - 1, j);
    if (!r.expect(ctx.integral_class_is_zero(maps.I(maps.a(eta)).c), "I o a is nonzero in cohomology", {{"eta", to_json(eta)}}))
      return r;
    r.witness();
  }
  const IntegerSolver& int_b = ctx.integral_coboundaries();
  for (std::size_t t = 0; t < ctx.trials(); ++t) {
    const DiffCochain d = plain.a(rng.form(x, k - 1)) + random_dhat_coboundary(ctx, rng);
    const auto e = int_b.solve(d.c.integer_values());
    if (!r.expect(std::holds_alternative<IntVector>(e), "kernel sample of I has no integral primitive", {{"sample", to_json(d)}}))
      return r;
    DiffCochain y = DiffCochain::zero(x, k, k - 1);
    y.c = Cochain::from_integers(k - 1, std::get<IntVector>(e));
    const WhitneyForm eta = whitney(d.T + include_coefficients(y.c));
    if (!r.expect(maps.a(eta) + dhat(x, y) == d, "class in ker I is not in im a", {{"sample", to_json(d)}, {"eta", to_json(eta)}}))
      return r;
    r.witness();
  }
  form_node_exactness(ctx, maps, r, rng);
  if (r.failed()) return r;
  std::size_t torsion_hit = 0;
  for (const auto& g : ctx.cocycle_lattice()) {
    const DiffCochain d = witness_I_surjective(x, g.c, Cochain::zero(x, k, Ring::Rational));
    if (!r.expect(maps.I(d).c == g.c, "induced I misses a generator", {{"cocycle", to_json(g.c)}})) return r;
    if (!ctx.integral_class_is_zero(g.c) && ctx.rational_is_coboundary(include_coefficients(g.c))) ++torsion_hit;
    r.witness();
  }
  r.details["torsion_classes_hit_by_I"] = torsion_hit;

  // Squares and triangles of the induced diagram on sampled classes.
  const HomologyBasis cycles = homology_basis(x, k - 1);
  for (std::size_t t = 0; t < ctx.trials(); ++t) {
    const ConeCochain z = ctx.random_cone_cocycle(rng);
    const CocyclePair up = maps.I(maps.i(z));
    const CocyclePair bockstein = maps.beta(z);
    if (!r.expect(ctx.integral_class_is_zero(up.c - bockstein.c), "upper triangle fails in H^k(Z)", {{"input", to_json(z)}}))
      return r;

    const WhitneyForm eta = rng.form(x, k - 1);
    if (!r.expect(maps.R(maps.a(eta)) == exterior_derivative(x, eta), "lower triangle fails", {{"eta", to_json(eta)}})) return r;

    const WhitneyForm closed = ctx.random_closed_lower_form(rng);
    const Cochain w = derham_cochain(closed) + coboundary(x, rng.rational_cochain(x, k - 2));
    const DiffCochain left = maps.i(alpha_cone(x, w)) - maps.a(derham_representative(x, w));
    if (!r.expect(is_cocycle(x, left) && solver.preimage(left).has_value(), "left square fails in Hhat", {{"cocycle", to_json(w)}}))
      return r;

    const DiffCochain d = ctx.random_cocycle(rng);
    const Cochain diff = maps.ch(maps.I(d)) - maps.der(maps.R(d));
    if (!r.expect(ctx.rational_is_coboundary(diff), "right square fails in H^k(Q)", {{"cocycle", to_json(d)}})) return r;

    // Descent: cohomologous cocycles have the same induced images.
    const DiffCochain d2 = d + random_dhat_coboundary(ctx, rng);
    bool same = maps.R(d) == maps.R(d2) && ctx.integral_class_is_zero(maps.I(d).c - maps.I(d2).c);
    for (const auto& cyc : cycles_of(cycles))
      same = same && evaluate_character(x, d, cyc) == evaluate_character(x, d2, cyc);
    if (!r.expect(same, "induced images differ on cohomologous cocycles", {{"x", to_json(d)}, {"x'", to_json(d2)}})) return r;
    r.witness(5);
  }
  return r;
}

CheckReport check_bunke_schick(const HexagonContext& ctx, const HexagonMaps& maps) {
  CheckReport r = start(ctx, "bunke_schick");
  Sampler rng(r.seed);
  const auto& x = ctx.complex();
  const int k = ctx.degree();

  // Square: de Rham class of R equals the rational image of the class of I.
  std::vector<DiffCochain> cocycles = ctx.cocycle_lattice();
  cocycles.insert(cocycles.end(), ctx.cocycle_space().begin(), ctx.cocycle_space().end());
  for (std::size_t t = 0; t < ctx.trials(); ++t) cocycles.push_back(ctx.random_cocycle(rng));
  for (const auto& d : cocycles) {
    const Cochain diff = maps.der(maps.R(d)) - include_coefficients(maps.I(d).c);
    if (!r.expect(ctx.rational_is_coboundary(diff), "square does not commute in H^k(Q)", {{"cocycle", to_json(d)}})) return r;
    r.witness();
  }

  // Sequence: exact at the form node in both directions, and I o a = 0.
  form_node_exactness(ctx, maps, r, rng);
  if (r.failed()) return r;
  for (std::size_t t = 0; t < ctx.trials(); ++t) {
    const WhitneyForm eta = rng.form(x, k - 1);
    if (!r.expect(ctx.integral_class_is_zero(maps.I(maps.a(eta)).c), "I o a is nonzero in cohomology", {{"eta", to_json(eta)}}))
      return r;
    r.witness();
  }
  return r;
}

CheckReport check_off_diagonal_note(const HexagonContext& ctx, const HexagonMaps& maps) {
  CheckReport r = start(ctx, "off_diagonal_note");
  const auto& x = ctx.complex();
  const int k = ctx.degree();
  // 0 -> Omega^{k-1} -a-> Zhat -I-> Z x B -> 0
  const std::size_t composite_rank = rank(x.coboundary_matrix(k - 1));
  r.details["sequence"] = "Omega^{k-1} -a-> Zhat(k)^k -I-> Z^k x B^k";
  r.details["rank_of_I_after_a"] = composite_rank;
  r.details["dim_Omega^{k-1}"] = x.count(k - 1);
  for (std::size_t j = 0; j < x.count(k - 1); ++j) {
    const WhitneyForm eta = WhitneyForm::elementary(x, k - 1, j);
    const CocyclePair image = maps.I(maps.a(eta));
    if (!image.t.is_zero() || !image.c.is_zero()) {
      r.status = Status::NotExactConfirmed;
      r.details["demonstration"] = Json{{"eta", to_json(eta)}, {"a(eta)", to_json(maps.a(eta))}, {"I(a(eta))", pair_json(image)}};
      r.witness();
      return r;
    }
  }
  // I o a = 0 here; then ker I = {(0, T, 0) : dT = 0} = a(closed forms).
  for (const auto& w : ctx.closed_lower_forms()) {
    const DiffCochain d{k, k, Cochain::zero(x, k, Ring::Integer), derham_cochain(w), WhitneyForm::zero(x, k)};
    if (!r.expect(maps.a(whitney(d.T)) == d, "kernel of I not covered by a", {{"element", to_json(d)}})) return r;
    r.witness();
  }
  r.status = Status::NoCounterexample;
  return r;
}

CheckReport check_character_compatibility(const HexagonContext& ctx) {
  CheckReport r = start(ctx, "character_compatibility");
  Sampler rng(r.seed);
  const auto& x = ctx.complex();
  const int k = ctx.degree();

  std::vector<DiffCochain> cocycles = ctx.cocycle_lattice();
  cocycles.insert(cocycles.end(), ctx.cocycle_space().begin(), ctx.cocycle_space().end());
  for (std::size_t t = 0; t < ctx.trials(); ++t) cocycles.push_back(ctx.random_cocycle(rng));
  std::vector<Chain> chains;
  for (std::size_t j = 0; j < x.count(k); ++j) chains.push_back(elementary_chain(x, k, j));
  for (int t = 0; t < 5 && x.count(k) > 0; ++t) chains.push_back(Chain{k, rng.integers(x.count(k))});
  for (const auto& d : cocycles) {
    for (const auto& b : chains) {
      const Rational lhs = evaluate(d.T, boundary(x, b));
      const Rational form = integrate(*d.omega, b);
      const bool ok = lhs == form - evaluate(d.c, b) && mod_one(lhs) == mod_one(form);
      if (!r.expect(ok, "T(boundary b) differs from the integral of w over b mod Z",
                    {{"cocycle", to_json(d)}, {"chain", to_json(b)}}))
        return r;
      r.witness();
    }
  }

  const std::vector<Chain> cycles = cycles_of(homology_basis(x, k - 1));
  for (std::size_t t = 0; t < ctx.trials(); ++t) {
    const DiffCochain b = random_dhat_coboundary(ctx, rng);
    const DiffCochain d1 = ctx.random_cocycle(rng);
    const DiffCochain d2 = ctx.random_cocycle(rng);
    for (const auto& z : cycles) {
      if (!r.expect(evaluate_character(x, b, z) == 0, "character of a coboundary is nonzero", {{"coboundary", to_json(b)}, {"cycle", to_json(z)}}))
        return r;
      const Rational sum = mod_one(evaluate_character(x, d1, z) + evaluate_character(x, d2, z));
      if (!r.expect(evaluate_character(x, d1 + d2, z) == sum, "character is not additive", {{"x1", to_json(d1)}, {"x2", to_json(d2)}}))
        return r;
      r.witness();
    }
  }
  return r;
}

CheckReport check_derham_identities(const HexagonContext& ctx) {
  CheckReport r = start(ctx, "derham_identities");
  Sampler rng(r.seed);
  const auto& x = ctx.complex();
  for (int deg : {ctx.degree() - 1, ctx.degree()}) {
    std::vector<Cochain> cochains;
    for (std::size_t j = 0; j < x.count(deg); ++j) cochains.push_back(Cochain::elementary(x, deg, j, Ring::Rational));
    for (std::size_t t = 0; t < ctx.trials(); ++t) cochains.push_back(rng.rational_cochain(x, deg));
    for (const auto& c : cochains) {
      const WhitneyForm w = whitney(c);
      if (!r.expect(derham_cochain(w) == c, "integration does not invert the Whitney map", {{"cochain", to_json(c)}})) return r;
      if (!r.expect(exterior_derivative(x, w) == whitney(coboundary(x, c)), "d o W != W o delta", {{"cochain", to_json(c)}}))
        return r;
      if (!r.expect(coboundary(x, derham_cochain(w)) == derham_cochain(exterior_derivative(x, w)), "delta o der != der o d",
                    {{"form", to_json(w)}}))
        return r;
      r.witness();
    }
  }

  // Closed forms have zero periods on torsion cycles.
  const int k = ctx.degree();
  const HomologyBasis h = homology_basis(x, k);
  std::vector<WhitneyForm> closed;
  const auto basis = rational_cocycle_basis(x, k);
  for (const auto& g : basis) closed.push_back(WhitneyForm{k, g});
  for (std::size_t t = 0; t < ctx.trials() && !basis.empty(); ++t) {
    RatVector v(x.count(k), Rational(0));
    for (const auto& g : basis) v = add(v, scale(rng.rational(), g));
    closed.push_back(WhitneyForm{k, v});
  }
  for (const auto& w : closed) {
    for (const auto& z : h.torsion_cycles) {
      if (!r.expect(integrate(w, z) == 0, "closed form has a nonzero torsion period", {{"form", to_json(w)}, {"cycle", to_json(z)}}))
        return r;
      r.witness();
    }
  }
  r.details["torsion_cycles"] = h.torsion_cycles.size();
  return r;
}

CheckReport check_dhat_squared(const HexagonContext& ctx) {
  CheckReport r = start(ctx, "dhat_squared");
  Sampler rng(r.seed);
  const auto& x = ctx.complex();
  const int k = ctx.degree();
  // Levels k-1 and k (k >= q), k+1 (k = q-1) and k+2 (k < q-1).
  for (int q : {k - 1, k, k + 1, k + 2}) {
    std::vector<DiffCochain> elements;
    const DiffCochain zero = DiffCochain::zero(x, q, k);
    for (std::size_t j = 0; j < x.count(k); ++j) {
      DiffCochain e = zero;
      e.c = Cochain::elementary(x, k, j, Ring::Integer);
      elements.push_back(e);
      if (e.has_form()) {
        e = zero;
        e.omega = WhitneyForm::elementary(x, k, j);
        elements.push_back(e);
      }
    }
    for (std::size_t j = 0; j < x.count(k - 1); ++j) {
      DiffCochain e = zero;
      e.T = Cochain::elementary(x, k - 1, j, Ring::Rational);
      elements.push_back(e);
    }
    for (std::size_t t = 0; t < ctx.trials(); ++t) {
      DiffCochain e = zero;
      e.c = rng.integer_cochain(x, k);
      e.T = rng.rational_cochain(x, k - 1);
      if (e.has_form()) e.omega = rng.form(x, k);
      elements.push_back(e);
    }
    for (const auto& e : elements) {
      if (!r.expect(dhat(x, dhat(x, e)).is_zero(), "dhat squared is nonzero", {{"level", q}, {"element", to_json(e)}})) return r;
      r.witness();
    }
  }
  return r;
}

CheckReport check_validate(const HexagonContext& ctx) {
  CheckReport r = start(ctx, "validate");
  const auto& x = ctx.complex();
  std::vector<std::vector<Simplex>> listing;
  for (int d = 0; d <= x.dimension(); ++d) listing.push_back(x.simplices(d));
  const auto violations = validate(x.vertex_count(), listing);
  if (!violations.empty()) {
    r.fail("complex fails validation", {{"simplex", to_string(violations.front().simplex)}, {"message", violations.front().message}});
    return r;
  }
  r.witness();
  for (int d : {ctx.degree() - 1, ctx.degree()}) {
    if (d < 0) continue;
    const HomologyBasis h = homology_basis(x, d);
    if (!r.expect(certify(x, h), "homology basis fails certification", {{"homology_degree", d}})) return r;
    r.details["H_" + std::to_string(d)] = to_string(h.group);
    r.witness();
  }
  return r;
}

}  // namespace hexad
