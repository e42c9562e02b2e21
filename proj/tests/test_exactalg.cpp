#include "doctest.h"
#include "hexad/linsolve.hpp"
#include "hexad/mixed_subgroup.hpp"
#include "hexad/smith.hpp"
#include "support.hpp"

using namespace hexad;
using namespace testing_support;

namespace {

bool divisibility_chain(const SmithForm& f) {
  for (std::size_t i = 0; i < f.D.rows(); ++i)
    for (std::size_t j = 0; j < f.D.cols(); ++j)
      if (i != j && f.D(i, j) != 0) return false;
  for (std::size_t i = 0; i < f.rank; ++i) {
    if (f.D(i, i) <= 0) return false;
    if (i + 1 < f.rank && f.D(i + 1, i + 1) % f.D(i, i) != 0) return false;
  }
  for (std::size_t i = f.rank; i < std::min(f.D.rows(), f.D.cols()); ++i)
    if (f.D(i, i) != 0) return false;
  return true;
}

oracle::Closure circle() { return oracle::close(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(make_rational(2, 4) == q(1, 2));
  CHECK(make_rational(3, -6).get_den() == 2);
  CHECK(parse_rational("-3/6") == q(-1, 2));
  CHECK(parse_rational("+5") == q(5));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("1/-2"));
  CHECK(mod_one(q(-1, 3)) == q(2, 3));
  CHECK(to_string(q(4, 2)) == "2/1");
}

TEST_CASE("snf of the identity and of zero") {
  const SmithForm id = snf(IntMatrix::identity(3));
  CHECK(id.D == IntMatrix::identity(3));
  CHECK(id.U == IntMatrix::identity(3));
  CHECK(id.V == IntMatrix::identity(3));
  const SmithForm z = snf(IntMatrix(2, 3));
  CHECK(z.D == IntMatrix(2, 3));
  CHECK(z.rank == 0);
}

TEST_CASE("snf of the circle boundary") {
  const IntMatrix d1 = to_int_matrix(oracle::boundary(circle(), 1));
  const SmithForm f = snf(d1);
  CHECK(f.U * d1 * f.V == f.D);
  CHECK(f.invariant_factors() == zv({1, 1}));
  CHECK(f.D(2, 2) == 0);
}

TEST_CASE("snf property: exact factorization on random matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    const oracle::Mat raw = oracle::random_matrix(rng, rows, cols, -6, 6);
    const IntMatrix m = to_int_matrix(raw);
    const SmithForm f = snf(m);
    CHECK(f.U * m * f.V == f.D);
    CHECK(abs(determinant(f.U)) == 1);
    CHECK(abs(determinant(f.V)) == 1);
    CHECK(divisibility_chain(f));
    CHECK(f.rank == oracle::rank_mod(raw, oracle::big_prime));
    CHECK(unimodular_inverse(f.U) * f.U == IntMatrix::identity(rows));
  }
}

TEST_CASE("integer solving: small examples") {
  IntMatrix two(1, 1);
  two(0, 0) = 2;
  CHECK(integer_solve(two, zv({4})) == zv({2}));
  CHECK_FALSE(integer_solve(two, zv({3})).has_value());
  const auto r = IntegerSolver(two).solve(zv({3}));
  REQUIRE(std::holds_alternative<LatticeObstruction>(r));
  CHECK(verify_obstruction(two, zv({3}), std::get<LatticeObstruction>(r)));
}

TEST_CASE("integer solving on the circle agrees with enumeration") {
  const oracle::Mat d1 = oracle::boundary(circle(), 1);
  oracle::Mat delta0(3, std::vector<long long>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) delta0[i][j] = d1[j][i];
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 20; ++t) {
    const std::vector<long long> x0{d(rng), d(rng), d(rng)};
    std::vector<long long> b(3, 0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) b[i] += delta0[i][j] * x0[j];
    const IntMatrix a = to_int_matrix(delta0);
    IntVector bz;
    for (long long v : b) bz.emplace_back(static_cast<long>(v));
    const auto x = integer_solve(a, bz);
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == bz);
    CHECK(oracle::enumerate_solution(delta0, b, 8).has_value());
  }
}

TEST_CASE("integer solving property: sound and complete against enumeration") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 80; ++t) {
    const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
    const oracle::Mat raw = oracle::random_matrix(rng, rows, cols, -3, 3);
    const oracle::Mat braw = oracle::random_matrix(rng, 1, rows, -4, 4);
    const IntMatrix a = to_int_matrix(raw);
    IntVector b;
    for (long long v : braw[0]) b.emplace_back(static_cast<long>(v));
    const auto found = oracle::enumerate_solution(raw, braw[0], 5);
    const auto r = IntegerSolver(a).solve(b);
    if (const auto* x = std::get_if<IntVector>(&r)) {
      CHECK(a.apply(*x) == b);
    } else {
      CHECK(verify_obstruction(a, b, std::get<LatticeObstruction>(r)));
      CHECK_FALSE(found.has_value());
    }
    if (found) CHECK(std::holds_alternative<IntVector>(r));
  }
}

TEST_CASE("rational solving") {
  RatMatrix id = RatMatrix::identity(3);
  CHECK(rational_solve(id, qv({q(1, 2), q(-3), q(7, 5)})) == qv({q(1, 2), q(-3), q(7, 5)}));
  RatMatrix a = RatMatrix::from_rows(2, {qv({q(1), q(1)}), qv({q(2), q(2)})});
  CHECK_FALSE(rational_solve(a, qv({q(1), q(3)})).has_value());
  const auto x = rational_solve(a, qv({q(1), q(2)}));
  REQUIRE(x.has_value());
  CHECK((*x)[0] + (*x)[1] == 1);
  CHECK(nullspace(a).size() == 1);
}

TEST_CASE("mixed membership examples") {
  MixedSubgroup s{1, {qv({q(2)})}, {}};
  CHECK(is_member(mixed_membership(qv({q(0)}), s)));
  const auto r = mixed_membership(qv({q(1)}), s);
  REQUIRE_FALSE(is_member(r));
  CHECK(verify_certificate(qv({q(1)}), s, std::get<NonMembershipCertificate>(r)));

  MixedSubgroup t{2, {qv({q(2), q(0)})}, {qv({q(0), q(1)})}};
  const auto m = mixed_membership(qv({q(4), q(1, 3)}), t);
  REQUIRE(is_member(m));
  const auto& w = std::get<MembershipWitness>(m);
  CHECK(w.lattice_coeffs == zv({2}));
  CHECK(w.space_coeffs == qv({q(1, 3)}));
}

TEST_CASE("mixed membership property: constructed members accepted, shifted vectors rejected") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> small(-3, 3), coef(-5, 5);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng() % 3;
    MixedSubgroup s;
    s.ambient_dim = n;
    const std::size_t nl = rng() % 3, ns = rng() % (n - 1);
    for (std::size_t i = 0; i < nl; ++i) {
      RatVector g(n);
      for (auto& v : g) v = small(rng);
      s.lattice_gens.push_back(g);
    }
    for (std::size_t i = 0; i < ns; ++i) {
      RatVector g(n);
      for (auto& v : g) v = make_rational(small(rng), 1 + rng() % 3);
      s.space_gens.push_back(g);
    }
    RatVector x(n, Rational(0));
    for (const auto& g : s.lattice_gens) x = add(x, scale(Rational(coef(rng)), g));
    for (const auto& g : s.space_gens) x = add(x, scale(make_rational(coef(rng), 1 + rng() % 4), g));
    const auto r = mixed_membership(x, s);
    REQUIRE(is_member(r));
    CHECK(verify_witness(x, s, std::get<MembershipWitness>(r)));

    // A functional vanishing on the space part and integral on the lattice,
    // pushed to 1/2 on the shifted vector.
    RatMatrix sp(ns, n);
    for (std::size_t i = 0; i < ns; ++i)
      for (std::size_t j = 0; j < n; ++j) sp(i, j) = s.space_gens[i][j];
    const auto kernel = ns ? nullspace(sp) : std::vector<RatVector>{RatVector(n, Rational(0))};
    RatVector phi = kernel.front();
    if (ns == 0) phi[0] = 1;
    const IntVector p = primitive_integer_vector(phi);
    const RatVector pq = to_rational(p);
    Integer content = 0;
    for (const auto& g : s.lattice_gens) content = gcd(content, Integer(dot(pq, g).get_num()));
    const Integer m = content == 0 ? Integer(1) : content;
    const RatVector shifted = add(x, scale(make_rational(m, 2 * Integer(dot(pq, pq).get_num())), pq));
    const auto rs = mixed_membership(shifted, s);
    REQUIRE_FALSE(is_member(rs));
    CHECK(verify_certificate(shifted, s, std::get<NonMembershipCertificate>(rs)));
  }
}

TEST_CASE("quotient groups") {
  MixedSubgroup z1{1, {qv({q(1)})}, {}}, b2{1, {qv({q(2)})}, {}};
  CHECK(quotient_group(z1, b2) == FgAbelianGroup{0, zv({2})});
  MixedSubgroup z2{2, {qv({q(1), q(0)}), qv({q(0), q(1)})}, {}}, zero{2, {}, {}};
  CHECK(quotient_group(z2, zero) == FgAbelianGroup{2, {}});
  CHECK_THROWS_AS(quotient_group(b2, z1), std::invalid_argument);
  CHECK(to_string(FgAbelianGroup{2, zv({2, 4})}) == "Z^2 + Z/2 + Z/4");
  CHECK(to_string(FgAbelianGroup{}) == "0");
}

TEST_CASE("quotient group property: invariant under unimodular change of generators") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> small(-2, 2);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + rng() % 3;
    MixedSubgroup z{n, {}, {}}, b{n, {}, {}};
    for (std::size_t i = 0; i < n; ++i) z.lattice_gens.push_back(to_rational(IntMatrix::identity(n).column(i)));
    const std::size_t nb = 1 + rng() % n;
    for (std::size_t i = 0; i < nb; ++i) {
      RatVector g(n);
      for (auto& v : g) v = small(rng) * 2;
      b.lattice_gens.push_back(g);
    }
    const FgAbelianGroup g0 = quotient_group(z, b);
    // Row-mix the generators with elementary unimodular moves.
    MixedSubgroup z2 = z, b2 = b;
    for (int mv = 0; mv < 5; ++mv) {
      const std::size_t i = rng() % n, j = rng() % n;
      if (i != j) z2.lattice_gens[i] = add(z2.lattice_gens[i], scale(Rational(small(rng)), z2.lattice_gens[j]));
      const std::size_t a = rng() % nb, c = rng() % nb;
      if (a != c) b2.lattice_gens[a] = add(b2.lattice_gens[a], scale(Rational(small(rng)), b2.lattice_gens[c]));
    }
    std::shuffle(z2.lattice_gens.begin(), z2.lattice_gens.end(), rng);
    std::shuffle(b2.lattice_gens.begin(), b2.lattice_gens.end(), rng);
    CHECK(quotient_group(z2, b2) == g0);
  }
}
