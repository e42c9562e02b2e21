#include "doctest.h"
#include "hexad/catalog.hpp"
#include "hexad/cohomology.hpp"
#include "hexad/errors.hpp"
#include "hexad/forms.hpp"
#include "hexad/hexagon.hpp"
#include "hexad/verify.hpp"
#include "reverify.hpp"
#include "support.hpp"

using namespace hexad;
using namespace testing_support;

namespace {

std::size_t edge(const SimplicialComplex& x, int a, int b) { return *x.index_of({a, b}); }

DiffCochain circle_generator(const SimplicialComplex& x) {
  DiffCochain d = DiffCochain::zero(x, 1, 1);
  d.c = Cochain::elementary(x, 1, edge(x, 0, 1), Ring::Integer);
  d.omega = whitney(include_coefficients(d.c));
  return d;
}

const CheckReport& find(const std::vector<CheckReport>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return r;
  throw std::out_of_range(name);
}

}  // namespace

TEST_CASE("maps on zero inputs") {
  const SimplicialComplex x = catalog("torus");
  const int k = 1;
  const DiffCochain z = DiffCochain::zero(x, k, k);
  CHECK(map_I(x, z) == CocyclePair{Cochain::zero(x, k, Ring::Integer), Cochain::zero(x, k, Ring::Rational)});
  CHECK(map_R(x, z).is_zero());
  CHECK(map_a(x, WhitneyForm::zero(x, k - 1)).is_zero());
  CHECK(map_i(x, ConeCochain::zero(x, k - 1)).is_zero());
  CHECK(map_ch(x, map_I(x, z)).is_zero());
  CHECK(map_beta(x, ConeCochain::zero(x, k - 1)) == map_I(x, z));
  CHECK(map_b(x, WhitneyForm::zero(x, k - 1)) == ConeCochain::zero(x, k - 1));
  CHECK(map_iota(x, WhitneyForm::zero(x, k - 1)).is_zero());
  CHECK(witness_R_surjective(x, WhitneyForm::zero(x, k)).is_zero());
  CHECK(witness_I_surjective(x, Cochain::zero(x, k, Ring::Integer), Cochain::zero(x, k, Ring::Rational)).is_zero());
}

TEST_CASE("maps reject inputs outside their domains") {
  const SimplicialComplex x = catalog("circle");
  DiffCochain bad = DiffCochain::zero(x, 1, 1);
  bad.T = Cochain::elementary(x, 0, 0, Ring::Rational);
  CHECK_THROWS_AS(map_I(x, bad), PreconditionError);
  CHECK_THROWS_AS(map_R(x, bad), PreconditionError);
  const SimplicialComplex s = catalog("sphere");
  CHECK_THROWS_AS(map_b(s, WhitneyForm::elementary(s, 0, 0)), PreconditionError);
  CHECK_THROWS_AS(map_iota(s, WhitneyForm::elementary(s, 0, 0)), PreconditionError);
  CHECK_THROWS_AS(witness_R_surjective(x, make_rational(1, 2) * WhitneyForm::elementary(x, 1, 0)), PreconditionError);
  CHECK_THROWS_AS(witness_I_surjective(x, Cochain::zero(x, 1, Ring::Integer), Cochain::elementary(x, 1, 0, Ring::Rational)),
                  PreconditionError);
  CHECK_THROWS_AS(HexagonContext(x, 0, 1, 1), PreconditionError);
  CHECK_THROWS_AS(HexagonContext(x, 3, 1, 1), PreconditionError);
}

TEST_CASE("the circle generator") {
  const SimplicialComplex x = catalog("circle");
  const DiffCochain g = circle_generator(x);
  const CocyclePair p = map_I(x, g);
  CHECK(p.c == g.c);
  CHECK(p.t.is_zero());
  CHECK(abs(period_vector(x, map_R(x, g)).periods.at(0)) == 1);
  CHECK(map_ch(x, p) == include_coefficients(g.c));
}

TEST_CASE("a of a third-period form has character one third") {
  const SimplicialComplex x = catalog("circle");
  const Chain z = homology_basis(x, 1).free_cycles.at(0);
  const WhitneyForm eta = make_rational(z.coeffs[edge(x, 0, 1)], 3) * WhitneyForm::elementary(x, 1, edge(x, 0, 1));
  CHECK(integrate(eta, z) == q(1, 3));
  const DiffCochain d = map_a(x, eta);
  CHECK(evaluate_character(x, d, z) == q(1, 3));
  CHECK_FALSE(map_a(x, eta).is_zero());
}

TEST_CASE("period-one forms die under a, period-one-half forms survive") {
  const SimplicialComplex x = catalog("circle");
  const HexagonContext ctx(x, 2, 1, 1);
  const WhitneyForm one = WhitneyForm::elementary(x, 1, edge(x, 0, 1));
  const auto pre = ctx.dhat_coboundaries().preimage(map_a(x, one));
  REQUIRE(pre.has_value());
  CHECK(dhat(x, *pre) == map_a(x, one));
  CHECK_FALSE(ctx.dhat_coboundaries().preimage(map_a(x, make_rational(1, 2) * one)).has_value());
}

TEST_CASE("triangle and square identities on random samples") {
  for (const auto& name : catalog_names()) {
    const SimplicialComplex x = catalog(name);
    for (int k = 1; k <= x.dimension() + 1; ++k) {
      INFO(name, " k=", k);
      const HexagonContext ctx(x, k, 5, 10);
      Sampler rng(derive_seed(5, name));
      for (int t = 0; t < 10; ++t) {
        const ConeCochain z = ctx.random_cone_cocycle(rng);
        CHECK(map_I(x, map_i(x, z)) == map_beta(x, z));
        CHECK(map_R(x, map_i(x, z)).is_zero());
        const WhitneyForm eta = rng.form(x, k - 1);
        CHECK(map_R(x, map_a(x, eta)) == exterior_derivative(x, eta));
        const WhitneyForm w = ctx.random_closed_lower_form(rng);
        CHECK(map_i(x, map_b(x, w)) == map_a(x, map_iota(x, w)));
        const DiffCochain d = ctx.random_cocycle(rng);
        CHECK(map_ch(x, map_I(x, d)) == derham_cochain(map_R(x, d)));
      }
    }
  }
}

TEST_CASE("surjectivity witnesses") {
  const SimplicialComplex x = catalog("circle");
  const WhitneyForm exact = exterior_derivative(x, WhitneyForm::elementary(x, 0, 1));
  const DiffCochain we = witness_R_surjective(x, exact);
  CHECK(map_R(x, we) == exact);
  const HexagonContext ctx(x, 1, 1, 1);
  CHECK(ctx.integral_class_is_zero(we.c));

  Cochain three = Cochain::elementary(x, 1, edge(x, 0, 1), Ring::Integer);
  three = Rational(3) * three;
  const WhitneyForm w3 = whitney(include_coefficients(three));
  const DiffCochain wt = witness_R_surjective(x, w3);
  CHECK(map_R(x, wt) == w3);
  const Chain z = homology_basis(x, 1).free_cycles.at(0);
  CHECK(abs(evaluate(include_coefficients(wt.c), z)) == 3);

  const SimplicialComplex t = catalog("torus");
  Sampler rng(17);
  const auto cocycles = integral_cocycle_basis(t, 1);
  for (int i = 0; i < 50; ++i) {
    Cochain c = Cochain::zero(t, 1, Ring::Integer);
    for (const auto& g : cocycles) c = c + rng.integer() * Cochain::from_integers(1, g);
    const Cochain s = coboundary(t, rng.rational_cochain(t, 0));
    const DiffCochain a = witness_I_surjective(t, c, s);
    const DiffCochain b = witness_I_surjective_adjusted(t, c, s, rng.rational_cochain(t, 0));
    CHECK(map_I(t, a) == CocyclePair{c, s});
    CHECK(map_I(t, b) == map_I(t, a));
    CHECK(is_cocycle(t, b));
  }
}

TEST_CASE("every check passes on every catalog complex") {
  for (const auto& name : catalog_names()) {
    const SimplicialComplex x = catalog(name);
    for (int k = 1; k <= x.dimension() + 1; ++k) {
      INFO(name, " k=", k);
      const auto reports = run_checks(x, k, 11, 10);
      CHECK(reports.size() == 13);
      CHECK_FALSE(any_failed(reports));
      for (const auto& r : reports)
        if (r.name != "off_diagonal_note") CHECK(r.status == Status::Pass);
    }
  }
}

TEST_CASE("group facts reproduced by the induced hexagon") {
  const auto h = [](const char* name, int k) {
    const SimplicialComplex x = catalog(name);
    return find(run_checks(x, k, 1, 5), "induced_hexagon").details.at("H^k(Z)").get<std::string>();
  };
  CHECK(h("circle", 1) == to_string(FgAbelianGroup{1, {}}));
  CHECK(h("projective-plane", 2) == to_string(FgAbelianGroup{0, zv({2})}));
  CHECK(h("torus", 1) == to_string(FgAbelianGroup{2, {}}));
  const auto rp = run_checks(catalog("projective-plane"), 2, 1, 20);
  CHECK(find(rp, "induced_hexagon").details.at("torsion_classes_hit_by_I").get<long>() > 0);
  const auto main = find(run_checks(catalog("circle"), 1, 1, 5), "main_diagonal");
  CHECK(main.details.at("i_kernel_dimension").get<long>() == 0);
  CHECK(main.details.at("a_kernel_dimension").get<long>() == 0);
  CHECK(main.witness_count >= 25);
}

TEST_CASE("the off-diagonal sequence") {
  const auto circle = find(run_checks(catalog("circle"), 1, 1, 5), "off_diagonal_note");
  CHECK(circle.status == Status::NotExactConfirmed);
  CHECK(circle.details.contains("demonstration"));
  const auto point = find(run_checks(catalog("point"), 1, 1, 5), "off_diagonal_note");
  CHECK(point.status == Status::NoCounterexample);
}

TEST_CASE("every single-sign mutation is caught on the circle in degree one") {
  const SimplicialComplex x = catalog("circle");
  for (HexMap m : all_hex_maps) {
    INFO(map_name(m));
    HexagonMaps maps(x);
    maps.flip(m);
    const auto reports = run_checks(x, 1, 42, 20, maps);
    CHECK(any_failed(reports));
    const CheckReport& faces = find(reports, "faces");
    REQUIRE(faces.status == Status::Fail);
    REQUIRE(faces.counterexample.has_value());
    CHECK(reverifies(x, maps, *faces.counterexample));
  }
}

TEST_CASE("flipping twice restores the maps") {
  const SimplicialComplex x = catalog("circle");
  HexagonMaps maps(x);
  maps.flip(HexMap::Beta);
  maps.flip(HexMap::Beta);
  CHECK_FALSE(maps.flipped(HexMap::Beta));
  CHECK_FALSE(any_failed(run_checks(x, 1, 3, 5, maps)));
}
