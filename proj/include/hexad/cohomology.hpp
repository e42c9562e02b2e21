#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hexad/cochain.hpp"
#include "hexad/complex.hpp"
#include "hexad/mixed_subgroup.hpp"

namespace hexad {

/// H^k(X; Q/Z) = (Q/Z)^divisible_rank + finite_part.
struct QmodZCohomology {
  std::size_t divisible_rank = 0;
  IntVector finite_part;  // invariant factors, each >= 2

  friend bool operator==(const QmodZCohomology&, const QmodZCohomology&) = default;
};

std::string to_string(const QmodZCohomology& g);

FgAbelianGroup integral_cohomology(const SimplicialComplex& x, int k);
std::size_t rational_cohomology_rank(const SimplicialComplex& x, int k);
/// Universal-coefficient bookkeeping read off the Smith form of the coboundary
/// C^k -> C^{k+1}: the divisible part has the rational rank and the finite part
/// is the torsion of coker(delta_k), i.e. of H^{k+1}(X; Z).
QmodZCohomology qmodz_cohomology(const SimplicialComplex& x, int k);

FgAbelianGroup integral_homology(const SimplicialComplex& x, int k);

/// Cycles generating H_k(X; Z): free_cycles project to a Z-basis of H_k/torsion,
/// torsion_cycles[i] has order torsion_orders[i].
struct HomologyBasis {
  int degree = 0;
  std::vector<Chain> free_cycles;
  std::vector<Chain> torsion_cycles;
  IntVector torsion_orders;
  FgAbelianGroup group;
};

HomologyBasis homology_basis(const SimplicialComplex& x, int k);

/// Re-checks a basis with the membership engine: every cycle is closed, the
/// free cycles are independent modulo boundaries, and every integral cycle is
/// a Z-combination of free cycles plus a rational combination of boundaries.
bool certify(const SimplicialComplex& x, const HomologyBasis& basis);

// Subgroups of the cochain group C^k(X; Q) = Q^count(k).

/// Z-basis of the integral cocycles Z^k(X; Z).
std::vector<IntVector> integral_cocycle_basis(const SimplicialComplex& x, int k);
/// Q-basis of the rational cocycles Z^k(X; Q).
std::vector<RatVector> rational_cocycle_basis(const SimplicialComplex& x, int k);
/// delta of each elementary (k-1)-cochain; spans B^k over Z and over Q.
std::vector<RatVector> coboundary_generators(const SimplicialComplex& x, int k);
/// {v in C^k(X; Q) : delta v is integral}. Its image mod Z is Z^k(X; Q/Z).
MixedSubgroup integral_coboundary_preimage(const SimplicialComplex& x, int k);
/// Z^k(X; Z) + B^k(X; Q): the rational cocycles whose class comes from an integral class.
MixedSubgroup integral_classes(const SimplicialComplex& x, int k);

}  // namespace hexad
