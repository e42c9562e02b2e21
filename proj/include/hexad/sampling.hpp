#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "hexad/forms.hpp"
#include "hexad/mixed_subgroup.hpp"

namespace hexad {

/// Stable per-check seed: FNV-1a of the check name mixed into the run seed.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view name);

/// Random elements for stress-testing witness code paths. Integers are uniform
/// in [-9, 9]; rationals have numerators in [-9, 9] and denominators in
/// {1, 2, 3, 4, 6}.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Integer integer();
  Rational rational();
  std::size_t index(std::size_t n);

  IntVector integers(std::size_t n);
  RatVector rationals(std::size_t n);

  Cochain integer_cochain(const SimplicialComplex& x, int k);
  Cochain rational_cochain(const SimplicialComplex& x, int k);
  WhitneyForm form(const SimplicialComplex& x, int k);

  /// Random integer coefficients on lattice generators, random rationals on space generators.
  RatVector element_of(const MixedSubgroup& s);

 private:
  std::mt19937_64 rng_;
};

}  // namespace hexad
