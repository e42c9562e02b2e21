#pragma once

#include <optional>

#include "hexad/cochain.hpp"
#include "hexad/forms.hpp"
#include "hexad/mixed_subgroup.hpp"

namespace hexad {

/// Element (c, T, omega) of the level-q differential cochain group in degree k:
/// c an integral k-cochain, T a real (k-1)-cochain, and omega a k-form that is
/// present exactly when k >= q.
struct DiffCochain {
  int level = 0;
  int degree = 0;
  Cochain c;
  Cochain T;
  std::optional<WhitneyForm> omega;

  static DiffCochain zero(const SimplicialComplex& x, int level, int degree);

  bool has_form() const noexcept { return degree >= level; }
  bool is_zero() const;

  DiffCochain operator-() const;
  friend DiffCochain operator+(const DiffCochain& a, const DiffCochain& b);
  friend DiffCochain operator-(const DiffCochain& a, const DiffCochain& b);
  friend bool operator==(const DiffCochain&, const DiffCochain&) = default;
};

std::string to_string(const DiffCochain& x);

/// Throws std::invalid_argument when the components do not match (level, degree) on x.
void check_shape(const SimplicialComplex& x, const DiffCochain& d);

/// The differential, by regime:
///   k >= q:    (c, T, w) -> (dc, int(w) - j(c) - dT, dw)
///   k == q-1:  (c, T)    -> (dc, -j(c) - dT, 0)
///   k <  q-1:  (c, T)    -> (dc, -j(c) - dT)
DiffCochain dhat(const SimplicialComplex& x, const DiffCochain& d);

bool is_cocycle(const SimplicialComplex& x, const DiffCochain& d);

/// Decides whether a degree-q, level-q element is a coboundary d^(c', T') with
/// c' integral and T' real. The real unknowns are eliminated first, leaving an
/// integer system for c'. Built once per (complex, level).
class CoboundarySolver {
 public:
  CoboundarySolver(const SimplicialComplex& x, int level);

  /// (c', T') with dhat(c', T') == d, or nullopt.
  std::optional<DiffCochain> preimage(const DiffCochain& d) const;

  /// Raw membership of the stacked (c, T) vector; ignores the form slot.
  MembershipResult test_components(const DiffCochain& d) const;

  const MixedSubgroup& subgroup() const noexcept { return solver_.subgroup(); }
  int level() const noexcept { return level_; }

 private:
  const SimplicialComplex* x_;
  int level_;
  PreparedSubgroup solver_;
};

/// Witness y with dhat(y) == d, or nullopt. Requires degree == level.
std::optional<DiffCochain> find_coboundary_preimage(const SimplicialComplex& x, const DiffCochain& d);

/// The character of a cocycle on an integral (k-1)-cycle: T(z) mod 1.
/// Throws PreconditionError for a non-cocycle or a non-closed chain.
Rational evaluate_character(const SimplicialComplex& x, const DiffCochain& d, const Chain& z);

RatVector stack(const RatVector& a, const RatVector& b);

}  // namespace hexad
