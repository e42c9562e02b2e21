#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hexad/matrix.hpp"

namespace hexad {

struct Echelon {
  RatMatrix reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(RatMatrix a);
std::size_t rank(const RatMatrix& a);
std::size_t rank(const IntMatrix& a);

/// Q-basis of {x : A x = 0}, one vector per free column (free entry set to 1).
std::vector<RatVector> nullspace(const RatMatrix& a);

/// Exact solution of A x = b with free variables set to zero, or nullopt.
std::optional<RatVector> rational_solve(const RatMatrix& a, const RatVector& b);

/// Multiplies v by the lcm of its denominators and divides out the content.
/// The result is a primitive integer vector on the same rational line.
IntVector primitive_integer_vector(const RatVector& v);

}  // namespace hexad
