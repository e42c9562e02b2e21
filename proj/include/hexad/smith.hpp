#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "hexad/matrix.hpp"

namespace hexad {

/// U * M * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_rank > 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;

  /// The nonzero diagonal entries d_1, ..., d_rank.
  IntVector invariant_factors() const;
};

SmithForm snf(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Inverse of a unimodular matrix; throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& u);

/// Z-basis of {x in Z^n : A x = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

/// A rational functional phi on the codomain with phi(A e_j) integral for every
/// column but phi(b) not integral. Any integer solution x of A x = b would give
/// phi(b) = sum x_j phi(A e_j), an integer, so this certifies NoSolution.
struct LatticeObstruction {
  RatVector functional;
};

/// Prepared integer solver for A x = b; the Smith form is computed once.
class IntegerSolver {
 public:
  explicit IntegerSolver(IntMatrix a);

  std::variant<IntVector, LatticeObstruction> solve(const IntVector& b) const;
  const IntMatrix& matrix() const noexcept { return a_; }

 private:
  IntMatrix a_;
  SmithForm form_;
};

/// x with A x = b over Z, or nullopt when no integer solution exists.
std::optional<IntVector> integer_solve(const IntMatrix& a, const IntVector& b);

bool verify_obstruction(const IntMatrix& a, const IntVector& b, const LatticeObstruction& obstruction);

}  // namespace hexad
