#include "hexad/mixed_subgroup.hpp"

#include <sstream>
#include <stdexcept>

#include "hexad/linsolve.hpp"

namespace hexad {

void MixedSubgroup::check_shape() const {
  for (const auto& g : lattice_gens)
    if (g.size() != ambient_dim) throw std::invalid_argument("MixedSubgroup: lattice generator has wrong length");
  for (const auto& g : space_gens)
    if (g.size() != ambient_dim) throw std::invalid_argument("MixedSubgroup: space generator has wrong length");
}

namespace {

IntMatrix annihilator_of(const MixedSubgroup& s) {
  RatMatrix st(s.space_gens.size(), s.ambient_dim);
  for (std::size_t i = 0; i < s.space_gens.size(); ++i)
    for (std::size_t j = 0; j < s.ambient_dim; ++j) st(i, j) = s.space_gens[i][j];
  std::vector<IntVector> rows;
  for (const auto& v : nullspace(st)) rows.push_back(primitive_integer_vector(v));
  return IntMatrix::from_rows(s.ambient_dim, rows);
}

Integer lattice_denominator_of(const MixedSubgroup& s) {
  Integer l = 1;
  for (const auto& g : s.lattice_gens) {
    const Integer d = common_denominator(g);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

IntMatrix projected_lattice(const MixedSubgroup& s, const IntMatrix& annihilator, const Integer& den) {
  IntMatrix out(annihilator.rows(), s.lattice_gens.size());
  for (std::size_t j = 0; j < s.lattice_gens.size(); ++j) {
    for (std::size_t i = 0; i < annihilator.rows(); ++i) {
      Rational acc = 0;
      for (std::size_t t = 0; t < s.ambient_dim; ++t)
        if (annihilator(i, t) != 0) acc += Rational(annihilator(i, t)) * s.lattice_gens[j][t];
      acc *= den;
      out(i, j) = acc.get_num();  // integral by choice of den
    }
  }
  return out;
}

NonMembershipCertificate make_certificate(const MixedSubgroup& s, RatVector functional) {
  NonMembershipCertificate c;
  c.kind = NonMembershipCertificate::Kind::Rational;
  for (const auto& g : s.lattice_gens)
    if (dot(functional, g) != 0) {
      c.kind = NonMembershipCertificate::Kind::Modular;
      break;
    }
  c.functional = std::move(functional);
  return c;
}

}  // namespace

PreparedSubgroup::PreparedSubgroup(MixedSubgroup s)
    : s_((s.check_shape(), std::move(s))),
      annihilator_(annihilator_of(s_)),
      lattice_denominator_(lattice_denominator_of(s_)),
      projected_(projected_lattice(s_, annihilator_, lattice_denominator_)) {}

MembershipResult PreparedSubgroup::test(const RatVector& x) const {
  if (x.size() != s_.ambient_dim) throw std::invalid_argument("mixed_membership: vector has wrong length");
  const std::size_t a = annihilator_.rows();
  const std::size_t n = s_.ambient_dim;

  RatVector ny(a);
  for (std::size_t i = 0; i < a; ++i) {
    Rational acc = 0;
    for (std::size_t t = 0; t < n; ++t)
      if (annihilator_(i, t) != 0) acc += Rational(annihilator_(i, t)) * x[t];
    ny[i] = acc * lattice_denominator_;
  }

  auto lift = [&](const RatVector& psi) {
    // phi = den * sum_i psi_i * annihilator row i
    RatVector phi(n, Rational(0));
    for (std::size_t i = 0; i < a; ++i) {
      if (psi[i] == 0) continue;
      for (std::size_t t = 0; t < n; ++t) phi[t] += psi[i] * Rational(annihilator_(i, t));
    }
    return make_certificate(s_, scale(Rational(lattice_denominator_), phi));
  };

  for (std::size_t i = 0; i < a; ++i) {
    if (!is_integral(ny[i])) {
      RatVector psi(a, Rational(0));
      psi[i] = 1;
      return lift(psi);
    }
  }

  auto solved = projected_.solve(to_integer(ny));
  if (auto* obstruction = std::get_if<LatticeObstruction>(&solved)) return lift(obstruction->functional);

  MembershipWitness w;
  w.lattice_coeffs = std::get<IntVector>(std::move(solved));
  RatVector residual = x;
  for (std::size_t j = 0; j < s_.lattice_gens.size(); ++j)
    if (w.lattice_coeffs[j] != 0) residual = sub(residual, scale(Rational(w.lattice_coeffs[j]), s_.lattice_gens[j]));

  const RatMatrix space = RatMatrix::from_columns(n, s_.space_gens);
  auto q = rational_solve(space, residual);
  if (!q) throw std::logic_error("mixed_membership: residual escaped the space part");
  w.space_coeffs = std::move(*q);
  return w;
}

MembershipResult mixed_membership(const RatVector& x, const MixedSubgroup& s) { return PreparedSubgroup(s).test(x); }

bool verify_witness(const RatVector& x, const MixedSubgroup& s, const MembershipWitness& w) {
  if (w.lattice_coeffs.size() != s.lattice_gens.size() || w.space_coeffs.size() != s.space_gens.size()) return false;
  if (x.size() != s.ambient_dim) return false;
  RatVector acc(s.ambient_dim, Rational(0));
  for (std::size_t j = 0; j < s.lattice_gens.size(); ++j)
    acc = add(acc, scale(Rational(w.lattice_coeffs[j]), s.lattice_gens[j]));
  for (std::size_t j = 0; j < s.space_gens.size(); ++j) acc = add(acc, scale(w.space_coeffs[j], s.space_gens[j]));
  return acc == x;
}

bool verify_certificate(const RatVector& x, const MixedSubgroup& s, const NonMembershipCertificate& c) {
  if (c.functional.size() != s.ambient_dim || x.size() != s.ambient_dim) return false;
  for (const auto& g : s.space_gens)
    if (dot(c.functional, g) != 0) return false;
  for (const auto& g : s.lattice_gens) {
    const Rational v = dot(c.functional, g);
    if (!is_integral(v)) return false;
    if (c.kind == NonMembershipCertificate::Kind::Rational && v != 0) return false;
  }
  return !is_integral(dot(c.functional, x));
}

std::string to_string(const FgAbelianGroup& g) {
  std::ostringstream out;
  bool first = true;
  if (g.rank > 0) {
    out << "Z";
    if (g.rank > 1) out << "^" << g.rank;
    first = false;
  }
  for (const auto& d : g.torsion) {
    if (!first) out << " + ";
    out << "Z/" << d.get_str();
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

FgAbelianGroup group_from_diagonal(std::size_t free_rank, const IntVector& diagonal) {
  IntMatrix d(diagonal.size(), diagonal.size());
  for (std::size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
  const SmithForm f = snf(d);
  FgAbelianGroup g;
  g.rank = free_rank + (diagonal.size() - f.rank);
  for (const auto& x : f.invariant_factors())
    if (x > 1) g.torsion.push_back(x);
  return g;
}

FgAbelianGroup quotient_group(const MixedSubgroup& z, const MixedSubgroup& b) {
  if (!z.space_gens.empty() || !b.space_gens.empty())
    throw std::invalid_argument("quotient_group: space parts must be empty");
  if (z.ambient_dim != b.ambient_dim) throw std::invalid_argument("quotient_group: ambient dimension mismatch");
  const PreparedSubgroup pz(z);
  std::vector<IntVector> relations;
  for (std::size_t j = 0; j < b.lattice_gens.size(); ++j) {
    auto r = pz.test(b.lattice_gens[j]);
    auto* w = std::get_if<MembershipWitness>(&r);
    if (!w) throw std::invalid_argument("quotient_group: generator " + std::to_string(j) + " of B is not in Z");
    relations.push_back(w->lattice_coeffs);
  }
  const std::size_t m = z.lattice_gens.size();
  const Integer den = lattice_denominator_of(z);
  IntMatrix g(z.ambient_dim, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < z.ambient_dim; ++i) g(i, j) = Rational(z.lattice_gens[j][i] * den).get_num();
  for (auto& k : integer_kernel(g)) relations.push_back(std::move(k));

  const SmithForm f = snf(IntMatrix::from_columns(m, relations));
  FgAbelianGroup out;
  out.rank = m - f.rank;
  for (const auto& d : f.invariant_factors())
    if (d > 1) out.torsion.push_back(d);
  return out;
}

}  // namespace hexad
