#pragma once

#include <cstdint>

#include "hexad/cochain.hpp"
#include "hexad/mixed_subgroup.hpp"
#include "hexad/report.hpp"

namespace hexad {

/// Degree-k element (u, v) of the mapping cone of j : C(X; Z) -> C(X; Q):
/// u an integral (k+1)-cochain and v a rational k-cochain.
struct ConeCochain {
  int degree = 0;
  Cochain u;
  Cochain v;

  static ConeCochain zero(const SimplicialComplex& x, int degree);

  ConeCochain operator-() const;
  friend ConeCochain operator+(const ConeCochain& a, const ConeCochain& b);
  friend ConeCochain operator-(const ConeCochain& a, const ConeCochain& b);
  friend bool operator==(const ConeCochain&, const ConeCochain&) = default;
};

std::string to_string(const ConeCochain& x);
void check_shape(const SimplicialComplex& x, const ConeCochain& e);

/// delta_j(u, v) = (-du, dv - j(u))
ConeCochain delta_cone(const SimplicialComplex& x, const ConeCochain& e);
bool is_cone_cocycle(const SimplicialComplex& x, const ConeCochain& e);

/// alpha(c) = (0, c) for a rational k-cochain c.
ConeCochain alpha_cone(const SimplicialComplex& x, const Cochain& c);
/// gamma(u, v) = -u
Cochain gamma_cone(const ConeCochain& e);

/// The comparison map to Q/Z-cochains: (u, v) -> v mod 1.
Cochain cone_to_qmodz(const ConeCochain& e);

/// Stacked (u, v) vector.
RatVector stacked(const ConeCochain& e);

/// delta_j(C^{k-1}(j)) as a subgroup of the stacked degree-k vectors.
MixedSubgroup cone_coboundaries(const SimplicialComplex& x, int k);
/// Rational k-cochains whose reduction mod 1 is a Q/Z coboundary: Z^n + dQ.
MixedSubgroup qmodz_coboundary_lifts(const SimplicialComplex& x, int k);

/// Comparison of the cone cohomology with Q/Z cohomology in degree k:
/// well-definedness on coboundaries, surjectivity by explicit lifts and
/// injectivity by explicit cone primitives.
CheckReport cone_comparison(const SimplicialComplex& x, int k, std::size_t trials, std::uint64_t seed);

/// Exactness of H^k(Q) -> H^k(cone) -> H^{k+1}(Z) -> H^{k+1}(Q) at the two
/// middle terms, with witnesses on generators and random samples.
CheckReport les_exactness(const SimplicialComplex& x, int k, std::size_t trials, std::uint64_t seed);

/// delta_j o delta_j == 0 on generators and samples of C^k(j).
CheckReport cone_differential_squared(const SimplicialComplex& x, int k, std::size_t trials, std::uint64_t seed);

}  // namespace hexad
