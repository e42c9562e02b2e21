#include "doctest.h"
#include "hexad/catalog.hpp"
#include "hexad/cohomology.hpp"
#include "hexad/cone.hpp"
#include "hexad/io.hpp"
#include "hexad/sampling.hpp"
#include "support.hpp"

using namespace hexad;
using namespace testing_support;

namespace {

ConeCochain random_cone(const SimplicialComplex& x, int k, Sampler& rng) {
  return ConeCochain{k, rng.integer_cochain(x, k + 1), rng.rational_cochain(x, k)};
}

long detail(const CheckReport& r, const char* key) { return r.details.at(key).get<long>(); }

}  // namespace

TEST_CASE("cone differential examples") {
  const SimplicialComplex x = catalog("circle");
  CHECK(delta_cone(x, ConeCochain::zero(x, 0)) == ConeCochain::zero(x, 1));
  const Cochain v = Cochain::elementary(x, 0, 0, Ring::Rational);
  const ConeCochain e{0, Cochain::zero(x, 1, Ring::Integer), v};
  const ConeCochain d = delta_cone(x, e);
  CHECK(d.u.is_zero());
  CHECK(d.v == coboundary(x, v));

  Sampler rng(1);
  for (int t = 0; t < 10; ++t) {
    const ConeCochain r = random_cone(x, 0, rng);
    CHECK(gamma_cone(r) == -r.u);
    const Cochain c = rng.rational_cochain(x, 1);
    CHECK(alpha_cone(x, c) == ConeCochain{1, Cochain::zero(x, 2, Ring::Integer), c});
    CHECK(gamma_cone(alpha_cone(x, c)).is_zero());
  }
}

TEST_CASE("cone differential squares to zero") {
  Sampler rng(2);
  for (const auto& name : catalog_names()) {
    const SimplicialComplex x = catalog(name);
    for (int k = -1; k <= x.dimension(); ++k) {
      for (std::size_t i = 0; i < x.count(k + 1); ++i) {
        const ConeCochain e{k, Cochain::elementary(x, k + 1, i, Ring::Integer), Cochain::zero(x, k, Ring::Rational)};
        CHECK(delta_cone(x, delta_cone(x, e)) == ConeCochain::zero(x, k + 2));
      }
      for (int t = 0; t < 100; ++t) {
        const ConeCochain e = random_cone(x, k, rng);
        CHECK(delta_cone(x, delta_cone(x, e)) == ConeCochain::zero(x, k + 2));
      }
      CHECK(cone_differential_squared(x, k, 20, 3).status == Status::Pass);
    }
  }
}

TEST_CASE("cone cocycles come from cochains with integral coboundary") {
  const SimplicialComplex x = catalog("projective-plane");
  Sampler rng(4);
  const MixedSubgroup pre = integral_coboundary_preimage(x, 1);
  for (int t = 0; t < 20; ++t) {
    const Cochain v(1, Ring::Rational, rng.element_of(pre));
    const Cochain dv = coboundary(x, v);
    const ConeCochain e{1, Cochain(2, Ring::Integer, dv.values()), v};
    CHECK(is_cone_cocycle(x, e));
  }
}

TEST_CASE("comparison with Q/Z cohomology") {
  for (int k = 1; k <= 3; ++k) CHECK(cone_comparison(catalog("point"), k, 20, 1).status == Status::Pass);
  CHECK(cone_comparison(catalog("circle"), 0, 50, 1).status == Status::Pass);
  for (const char* name : {"projective-plane", "klein-bottle"}) {
    const CheckReport r = cone_comparison(catalog(name), 1, 50, 1);
    CHECK(r.status == Status::Pass);
    CHECK(detail(r, "nontrivial_targets") > 0);
    CHECK(qmodz_cohomology(catalog(name), 1).finite_part == zv({2}));
  }
  for (const auto& name : catalog_names()) {
    const SimplicialComplex x = catalog(name);
    for (int k = 0; k <= x.dimension(); ++k) {
      INFO(name, " k=", k);
      CHECK(cone_comparison(x, k, 25, 9).status == Status::Pass);
    }
  }
}

TEST_CASE("long exact sequence") {
  CHECK(les_exactness(catalog("sphere"), 1, 50, 1).status == Status::Pass);
  const CheckReport rp = les_exactness(catalog("projective-plane"), 1, 50, 1);
  CHECK(rp.status == Status::Pass);
  CHECK(detail(rp, "nontrivial_gamma_images") > 0);
  for (const auto& name : catalog_names()) {
    const SimplicialComplex x = catalog(name);
    for (int k = 0; k <= x.dimension(); ++k) {
      INFO(name, " k=", k);
      CHECK(les_exactness(x, k, 25, 9).status == Status::Pass);
    }
  }
}

TEST_CASE("cone membership") {
  const SimplicialComplex x = catalog("circle");
  const MixedSubgroup b = cone_coboundaries(x, 1);
  Sampler rng(6);
  for (int t = 0; t < 20; ++t) {
    const ConeCochain e = delta_cone(x, random_cone(x, 0, rng));
    CHECK(is_member(mixed_membership(stacked(e), b)));
  }
  // (0, v) is a cone coboundary when v is integral, and not when v reduces to a nonzero Q/Z class.
  const Cochain e0 = Cochain::elementary(x, 1, 0, Ring::Rational);
  const ConeCochain whole{1, Cochain::zero(x, 2, Ring::Integer), e0};
  const ConeCochain half{1, Cochain::zero(x, 2, Ring::Integer), make_rational(1, 2) * e0};
  CHECK(is_cone_cocycle(x, half));
  CHECK(is_member(mixed_membership(stacked(whole), b)));
  CHECK_FALSE(is_member(mixed_membership(stacked(half), b)));
  const MixedSubgroup lifts = qmodz_coboundary_lifts(x, 0);
  CHECK(is_member(mixed_membership(qv({q(3), q(-1), q(2)}), lifts)));
}

TEST_CASE("cone cochain text round trip") {
  Sampler rng(8);
  const SimplicialComplex x = catalog("klein-bottle");
  for (int k = -1; k <= 2; ++k) {
    const ConeCochain e = random_cone(x, k, rng);
    CHECK(parse_cone_cochain(x, format_cone_cochain(x, e), "mem") == e);
  }
}
