#include "hexad/cohomology.hpp"

#include <sstream>

#include "hexad/linsolve.hpp"
#include "hexad/smith.hpp"

namespace hexad {

std::string to_string(const QmodZCohomology& g) {
  std::ostringstream out;
  bool first = true;
  if (g.divisible_rank > 0) {
    out << "(Q/Z)";
    if (g.divisible_rank > 1) out << "^" << g.divisible_rank;
    first = false;
  }
  for (const auto& d : g.finite_part) {
    if (!first) out << " + ";
    out << "Z/" << d.get_str();
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

namespace {

std::vector<RatVector> as_rational(const std::vector<IntVector>& vs) {
  std::vector<RatVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(to_rational(v));
  return out;
}

IntVector torsion_of(const SmithForm& f) {
  IntVector out;
  for (const auto& d : f.invariant_factors())
    if (d > 1) out.push_back(d);
  return out;
}

// Boundary C_k -> C_{k-1} as a (possibly zero-sized) matrix for every k.
IntMatrix boundary_or_zero(const SimplicialComplex& x, int k) {
  if (k >= 1 && k <= x.dimension()) return x.boundary_matrix(k);
  return IntMatrix(x.count(k - 1), x.count(k));
}

}  // namespace

std::vector<IntVector> integral_cocycle_basis(const SimplicialComplex& x, int k) {
  return integer_kernel(x.coboundary_matrix(k));
}

std::vector<RatVector> rational_cocycle_basis(const SimplicialComplex& x, int k) {
  return nullspace(to_rational(x.coboundary_matrix(k)));
}

std::vector<RatVector> coboundary_generators(const SimplicialComplex& x, int k) {
  const IntMatrix& d = x.coboundary_matrix(k - 1);
  std::vector<RatVector> out;
  for (std::size_t j = 0; j < d.cols(); ++j) out.push_back(to_rational(d.column(j)));
  return out;
}

MixedSubgroup integral_coboundary_preimage(const SimplicialComplex& x, int k) {
  const SmithForm f = snf(x.coboundary_matrix(k));
  MixedSubgroup s;
  s.ambient_dim = x.count(k);
  for (std::size_t j = 0; j < s.ambient_dim; ++j) {
    RatVector col = to_rational(f.V.column(j));
    if (j < f.rank)
      s.lattice_gens.push_back(scale(make_rational(1, f.D(j, j)), col));
    else
      s.space_gens.push_back(std::move(col));
  }
  return s;
}

MixedSubgroup integral_classes(const SimplicialComplex& x, int k) {
  MixedSubgroup s;
  s.ambient_dim = x.count(k);
  s.lattice_gens = as_rational(integral_cocycle_basis(x, k));
  s.space_gens = coboundary_generators(x, k);
  return s;
}

FgAbelianGroup integral_cohomology(const SimplicialComplex& x, int k) {
  MixedSubgroup z, b;
  z.ambient_dim = b.ambient_dim = x.count(k);
  z.lattice_gens = as_rational(integral_cocycle_basis(x, k));
  b.lattice_gens = coboundary_generators(x, k);
  return quotient_group(z, b);
}

std::size_t rational_cohomology_rank(const SimplicialComplex& x, int k) {
  const std::size_t cocycles = x.count(k) - rank(x.coboundary_matrix(k));
  return cocycles - rank(x.coboundary_matrix(k - 1));
}

QmodZCohomology qmodz_cohomology(const SimplicialComplex& x, int k) {
  return QmodZCohomology{rational_cohomology_rank(x, k), torsion_of(snf(x.coboundary_matrix(k)))};
}

FgAbelianGroup integral_homology(const SimplicialComplex& x, int k) {
  const SmithForm out = snf(boundary_or_zero(x, k));
  const SmithForm in = snf(boundary_or_zero(x, k + 1));
  FgAbelianGroup g;
  g.rank = x.count(k) - out.rank - in.rank;
  g.torsion = torsion_of(in);
  return g;
}

HomologyBasis homology_basis(const SimplicialComplex& x, int k) {
  HomologyBasis basis;
  basis.degree = k;
  const std::vector<IntVector> cycles = integer_kernel(boundary_or_zero(x, k));
  const IntMatrix into = boundary_or_zero(x, k + 1);

  MixedSubgroup z;
  z.ambient_dim = x.count(k);
  z.lattice_gens = as_rational(cycles);
  const PreparedSubgroup pz(z);
  std::vector<IntVector> coords;
  for (std::size_t j = 0; j < into.cols(); ++j) {
    auto r = pz.test(to_rational(into.column(j)));
    coords.push_back(std::get<MembershipWitness>(r).lattice_coeffs);  // boundaries are cycles
  }

  const std::size_t m = cycles.size();
  const SmithForm f = snf(IntMatrix::from_columns(m, coords));
  const IntMatrix generators = unimodular_inverse(f.U);
  auto chain_of = [&](std::size_t col) {
    IntVector c(x.count(k), Integer(0));
    for (std::size_t l = 0; l < m; ++l)
      if (generators(l, col) != 0) c = add(c, scale(generators(l, col), cycles[l]));
    return Chain{k, std::move(c)};
  };
  for (std::size_t i = 0; i < m; ++i) {
    if (i >= f.rank) {
      basis.free_cycles.push_back(chain_of(i));
    } else if (f.D(i, i) > 1) {
      basis.torsion_cycles.push_back(chain_of(i));
      basis.torsion_orders.push_back(f.D(i, i));
    }
  }
  basis.group.rank = basis.free_cycles.size();
  basis.group.torsion = basis.torsion_orders;
  return basis;
}

bool certify(const SimplicialComplex& x, const HomologyBasis& basis) {
  const int k = basis.degree;
  const IntMatrix out = boundary_or_zero(x, k);
  const IntMatrix into = boundary_or_zero(x, k + 1);
  auto closed = [&](const Chain& c) { return c.degree == k && is_zero(out.apply(c.coeffs)); };
  for (const auto& c : basis.free_cycles)
    if (!closed(c)) return false;
  for (const auto& c : basis.torsion_cycles)
    if (!closed(c)) return false;

  std::vector<RatVector> boundaries;
  for (std::size_t j = 0; j < into.cols(); ++j) boundaries.push_back(to_rational(into.column(j)));

  // Independence of the free cycles modulo boundaries, over Q.
  std::vector<RatVector> all = boundaries;
  for (const auto& c : basis.free_cycles) all.push_back(to_rational(c.coeffs));
  if (rank(RatMatrix::from_columns(x.count(k), all)) != rank(RatMatrix::from_columns(x.count(k), boundaries)) + basis.free_cycles.size())
    return false;

  // Torsion cycles: order * cycle is a boundary, and no smaller multiple is.
  MixedSubgroup bl;
  bl.ambient_dim = x.count(k);
  bl.lattice_gens = boundaries;
  const PreparedSubgroup pb(bl);
  for (std::size_t i = 0; i < basis.torsion_cycles.size(); ++i) {
    const RatVector c = to_rational(basis.torsion_cycles[i].coeffs);
    if (!is_member(pb.test(scale(Rational(basis.torsion_orders[i]), c)))) return false;
    for (Integer n = 1; n < basis.torsion_orders[i]; ++n)
      if (is_member(pb.test(scale(Rational(n), c)))) return false;
  }

  // Spanning: every integral cycle lies in Z*free + Q*boundaries.
  MixedSubgroup span;
  span.ambient_dim = x.count(k);
  for (const auto& c : basis.free_cycles) span.lattice_gens.push_back(to_rational(c.coeffs));
  span.space_gens = boundaries;
  const PreparedSubgroup ps(span);
  for (const auto& z : integer_kernel(out))
    if (!is_member(ps.test(to_rational(z)))) return false;
  return true;
}

}  // namespace hexad
