#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hexad/matrix.hpp"
#include "hexad/smith.hpp"

namespace hexad {

/// The subgroup  Z*lattice_gens + Q*space_gens  of Q^n.
///
/// Images and kernels of every map in the hexagon are of this shape: integral
/// cochain components contribute lattice generators and real-valued ones
/// contribute a vector-space part.
struct MixedSubgroup {
  std::size_t ambient_dim = 0;
  std::vector<RatVector> lattice_gens;
  std::vector<RatVector> space_gens;

  /// Throws std::invalid_argument when a generator has the wrong length.
  void check_shape() const;
};

struct MembershipWitness {
  IntVector lattice_coeffs;
  RatVector space_coeffs;
};

/// A functional vanishing on the space part, integral on every lattice
/// generator and non-integral on the rejected vector.
struct NonMembershipCertificate {
  enum class Kind { Rational, Modular };
  Kind kind = Kind::Rational;
  RatVector functional;
};

using MembershipResult = std::variant<MembershipWitness, NonMembershipCertificate>;

inline bool is_member(const MembershipResult& r) { return std::holds_alternative<MembershipWitness>(r); }

/// Membership oracle with the annihilator of the space part and the Smith form
/// of the projected lattice computed once up front.
///
/// Decision procedure: project along the space part with a rational
/// annihilator P (x lies in L + W iff P x lies in P L), clear denominators and
/// solve the remaining lattice system over Z. The space coefficients are then
/// recovered from the residual by a rational solve.
class PreparedSubgroup {
 public:
  explicit PreparedSubgroup(MixedSubgroup s);

  MembershipResult test(const RatVector& x) const;
  const MixedSubgroup& subgroup() const noexcept { return s_; }

 private:
  MixedSubgroup s_;
  IntMatrix annihilator_;  // rows vanish on the space part
  Integer lattice_denominator_;
  IntegerSolver projected_;  // annihilator * (denominator * lattice)
};

MembershipResult mixed_membership(const RatVector& x, const MixedSubgroup& s);

bool verify_witness(const RatVector& x, const MixedSubgroup& s, const MembershipWitness& w);
bool verify_certificate(const RatVector& x, const MixedSubgroup& s, const NonMembershipCertificate& c);

/// Finitely generated abelian group Z^rank + sum Z/d_i, d_1 | d_2 | ..., each d_i >= 2.
struct FgAbelianGroup {
  std::size_t rank = 0;
  IntVector torsion;

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;
};

/// "0", "Z", "Z^2 + Z/2", ...
std::string to_string(const FgAbelianGroup& g);

/// Builds the canonical group Z^free + sum Z/d from a list of diagonal entries
/// (entries equal to 1 are dropped; zeros count as free summands).
FgAbelianGroup group_from_diagonal(std::size_t free_rank, const IntVector& diagonal);

/// Invariant factors of Z/B for lattices B within Z (both with empty space part).
/// Throws std::invalid_argument if a generator of B does not lie in Z.
FgAbelianGroup quotient_group(const MixedSubgroup& z, const MixedSubgroup& b);

}  // namespace hexad
