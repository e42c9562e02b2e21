#include "doctest.h"
#include "hexad/catalog.hpp"
#include "hexad/cohomology.hpp"
#include "hexad/errors.hpp"
#include "hexad/forms.hpp"
#include "hexad/io.hpp"
#include "hexad/sampling.hpp"
#include "support.hpp"

using namespace hexad;
using namespace testing_support;

namespace {

std::size_t edge(const SimplicialComplex& x, int a, int b) { return *x.index_of({a, b}); }

Chain circle_cycle(const SimplicialComplex& x) {
  Chain z{1, IntVector(3)};
  z.coeffs[edge(x, 0, 1)] = 1;
  z.coeffs[edge(x, 1, 2)] = 1;
  z.coeffs[edge(x, 0, 2)] = -1;
  return z;
}

}  // namespace

TEST_CASE("exterior derivative") {
  const SimplicialComplex x = catalog("circle");
  CHECK(exterior_derivative(x, WhitneyForm::zero(x, 0)).is_zero());
  const WhitneyForm dw = exterior_derivative(x, WhitneyForm::elementary(x, 0, 0));
  CHECK(dw.coefficients[edge(x, 0, 1)] == -1);
  CHECK(dw.coefficients[edge(x, 1, 2)] == 0);
  CHECK(dw.coefficients[edge(x, 0, 2)] == -1);
  const SimplicialComplex t = catalog("torus");
  Sampler rng(3);
  for (int i = 0; i < 20; ++i) {
    const WhitneyForm w = rng.form(t, 0);
    CHECK(exterior_derivative(t, exterior_derivative(t, w)).is_zero());
  }
}

TEST_CASE("integration") {
  const SimplicialComplex x = catalog("circle");
  const WhitneyForm w01 = WhitneyForm::elementary(x, 1, edge(x, 0, 1));
  CHECK(integrate(w01, elementary_chain(x, 1, edge(x, 0, 1))) == 1);
  CHECK(integrate(w01, elementary_chain(x, 1, edge(x, 1, 2))) == 0);
  CHECK(integrate(Rational(2) * w01, circle_cycle(x)) == 2);
  CHECK_THROWS(integrate(w01, elementary_chain(x, 0, 0)));
}

TEST_CASE("de Rham cochain and Whitney map") {
  const SimplicialComplex x = catalog("sphere");
  CHECK(derham_cochain(WhitneyForm::zero(x, 1)).is_zero());
  CHECK(whitney(Cochain::zero(x, 1, Ring::Rational)).is_zero());
  for (std::size_t i = 0; i < x.count(1); ++i) {
    CHECK(derham_cochain(WhitneyForm::elementary(x, 1, i)) == Cochain::elementary(x, 1, i, Ring::Rational));
    CHECK(whitney(Cochain::elementary(x, 1, i, Ring::Rational)) == WhitneyForm::elementary(x, 1, i));
  }
}

TEST_CASE("periods") {
  const SimplicialComplex x = catalog("circle");
  const WhitneyForm zero = WhitneyForm::zero(x, 1);
  CHECK(is_zero(period_vector(x, zero).periods));
  CHECK(has_integral_periods(x, zero));
  const WhitneyForm half = make_rational(1, 2) * WhitneyForm::elementary(x, 1, edge(x, 0, 1));
  CHECK_FALSE(has_integral_periods(x, half));
  RatVector v(3);
  v[edge(x, 0, 1)] = 1;
  v[edge(x, 1, 2)] = 4;
  v[edge(x, 0, 2)] = 2;
  const WhitneyForm three = whitney(include_coefficients(Cochain(1, Ring::Integer, v)));
  const auto p = period_vector(x, three);
  REQUIRE(p.periods.size() == 1);
  CHECK(abs(p.periods[0]) == 3);
  CHECK(has_integral_periods(x, three));
  const SimplicialComplex s = catalog("sphere");
  CHECK_THROWS_AS(period_vector(s, WhitneyForm::elementary(s, 1, 0)), PreconditionError);
}

TEST_CASE("primitives") {
  const SimplicialComplex s = catalog("sphere");
  CHECK(find_primitive(s, Cochain::zero(s, 1, Ring::Rational)).is_zero());
  Sampler rng(9);
  for (int i = 0; i < 20; ++i) {
    const Cochain t = coboundary(s, rng.rational_cochain(s, 0));
    const WhitneyForm eta = find_primitive(s, t);
    CHECK(derham_cochain(exterior_derivative(s, eta)) == t);
  }
  const SimplicialComplex x = catalog("circle");
  Cochain gen = Cochain::elementary(x, 1, edge(x, 0, 1), Ring::Rational);
  CHECK_THROWS_AS(find_primitive(x, gen), NotExact);
  const WhitneyForm rep = derham_representative(x, gen);
  CHECK(abs(period_vector(x, rep).periods[0]) == 1);
  CHECK(derham_representative(x, Cochain::zero(x, 1, Ring::Rational)).is_zero());
  CHECK_THROWS_AS(derham_representative(s, Cochain::elementary(s, 1, 0, Ring::Rational)), PreconditionError);
}

TEST_CASE("Whitney identities on every catalog complex") {
  Sampler rng(21);
  for (const auto& name : catalog_names()) {
    const SimplicialComplex x = catalog(name);
    for (int k = 0; k <= x.dimension(); ++k) {
      INFO(name, " k=", k);
      for (std::size_t i = 0; i < x.count(k); ++i) {
        const Cochain e = Cochain::elementary(x, k, i, Ring::Rational);
        CHECK(derham_cochain(whitney(e)) == e);
        CHECK(exterior_derivative(x, whitney(e)) == whitney(coboundary(x, e)));
      }
      for (int t = 0; t < 25; ++t) {
        const Cochain c = rng.rational_cochain(x, k);
        CHECK(derham_cochain(whitney(c)) == c);
        CHECK(exterior_derivative(x, whitney(c)) == whitney(coboundary(x, c)));
        const WhitneyForm w = rng.form(x, k);
        CHECK(coboundary(x, derham_cochain(w)) == derham_cochain(exterior_derivative(x, w)));
      }
    }
  }
}

TEST_CASE("closed forms have zero periods on torsion cycles") {
  for (const char* name : {"projective-plane", "klein-bottle"}) {
    const SimplicialComplex x = catalog(name);
    const HomologyBasis basis = homology_basis(x, 1);
    REQUIRE(basis.torsion_cycles.size() == 1);
    Sampler rng(31);
    for (const auto& z : rational_cocycle_basis(x, 1)) {
      const WhitneyForm w = whitney(Cochain(1, Ring::Rational, z));
      CHECK(is_closed(x, w));
      CHECK(integrate(w, basis.torsion_cycles[0]) == 0);
    }
    for (int t = 0; t < 25; ++t) {
      const WhitneyForm w = exterior_derivative(x, rng.form(x, 0));
      CHECK(integrate(w, basis.torsion_cycles[0]) == 0);
    }
  }
}

TEST_CASE("form and cochain text round trip") {
  const SimplicialComplex x = catalog("torus");
  Sampler rng(41);
  for (int k = 0; k <= 2; ++k) {
    const WhitneyForm w = rng.form(x, k);
    CHECK(parse_form(x, format_form(x, w), "mem") == w);
    for (Ring r : {Ring::Integer, Ring::Rational, Ring::RationalModInteger}) {
      const Cochain c = r == Ring::Integer ? rng.integer_cochain(x, k)
                        : r == Ring::Rational ? rng.rational_cochain(x, k)
                                              : reduce_mod_one(rng.rational_cochain(x, k));
      CHECK(parse_cochain(x, format_cochain(x, c), "mem") == c);
    }
  }
}
