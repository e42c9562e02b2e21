#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string_view>

#include "hexad/cone.hpp"
#include "hexad/diff_cochain.hpp"
#include "hexad/report.hpp"
#include "hexad/sampling.hpp"

namespace hexad {

/// (c, t) with c an integral cocycle and t a rational coboundary, both of degree k.
struct CocyclePair {
  Cochain c;
  Cochain t;

  friend bool operator==(const CocyclePair&, const CocyclePair&) = default;
};

enum class HexMap { I, R, Der, A, Ch, Beta, B, Iota, Inc };

inline constexpr std::array<HexMap, 9> all_hex_maps{HexMap::I,    HexMap::R, HexMap::Der,  HexMap::A,  HexMap::Ch,
                                                    HexMap::Beta, HexMap::B, HexMap::Iota, HexMap::Inc};

std::string_view map_name(HexMap m);

/// The nine cocycle-level maps of the refined hexagon around Zhat(k)^k:
///
///   I(c, T, w) = (c, dT)          R(c, T, w) = w         der(w) = integral of w
///   a(eta) = (0, der eta, d eta)  ch(u, dS) = j(u) + dS  beta(u, v) = (-u, dv)
///   b(w) = (0, der w)             iota(w) = w            i(u, v) = (-u, v, 0)
///
/// No precondition checks. Each map has one sign that can be flipped, which
/// lets the verification suite be run against deliberately broken variants.
class HexagonMaps {
 public:
  explicit HexagonMaps(const SimplicialComplex& x) : x_(&x) {}

  void flip(HexMap m) { flipped_.flip(static_cast<std::size_t>(m)); }
  bool flipped(HexMap m) const { return flipped_.test(static_cast<std::size_t>(m)); }

  CocyclePair I(const DiffCochain& x) const;
  WhitneyForm R(const DiffCochain& x) const;
  Cochain der(const WhitneyForm& w) const;
  DiffCochain a(const WhitneyForm& eta) const;
  Cochain ch(const CocyclePair& p) const;
  CocyclePair beta(const ConeCochain& e) const;
  ConeCochain b(const WhitneyForm& w) const;
  WhitneyForm iota(const WhitneyForm& w) const;
  DiffCochain i(const ConeCochain& e) const;

  const SimplicialComplex& complex() const noexcept { return *x_; }

 private:
  Rational sign(HexMap m) const { return flipped(m) ? Rational(-1) : Rational(1); }

  const SimplicialComplex* x_;
  std::bitset<9> flipped_;
};

// Checked versions. Each throws PreconditionError when an input is outside the
// map's domain (non-cocycle, non-closed form, ...).
CocyclePair map_I(const SimplicialComplex& x, const DiffCochain& d);
WhitneyForm map_R(const SimplicialComplex& x, const DiffCochain& d);
DiffCochain map_a(const SimplicialComplex& x, const WhitneyForm& eta);
DiffCochain map_i(const SimplicialComplex& x, const ConeCochain& e);
Cochain map_ch(const SimplicialComplex& x, const CocyclePair& p);
CocyclePair map_beta(const SimplicialComplex& x, const ConeCochain& e);
ConeCochain map_b(const SimplicialComplex& x, const WhitneyForm& w);
WhitneyForm map_iota(const SimplicialComplex& x, const WhitneyForm& w);

/// Closed k-form with integral periods (Omega^k_Z).
bool in_omega_integral(const SimplicialComplex& x, const WhitneyForm& w);

/// (c, T, w) in Zhat(k)^k with R = w. Throws PreconditionError unless w is in Omega^k_Z.
DiffCochain witness_R_surjective(const SimplicialComplex& x, const WhitneyForm& w);

/// (c, T, w) with I = (c, t), where w = whitney(j(c) + t).
/// Throws PreconditionError unless c is an integral cocycle and t a rational coboundary.
DiffCochain witness_I_surjective(const SimplicialComplex& x, const Cochain& c, const Cochain& t);

/// Same target, constructed by starting from an arbitrary closed form
/// whitney(j(c)) + d(whitney(noise)) and correcting it by an exact form d(eta).
DiffCochain witness_I_surjective_adjusted(const SimplicialComplex& x, const Cochain& c, const Cochain& t,
                                          const Cochain& noise);

/// Cached data for one (complex, degree) pair, 1 <= k <= dim + 1.
class HexagonContext {
 public:
  HexagonContext(const SimplicialComplex& x, int k, std::uint64_t seed, std::size_t trials);

  const SimplicialComplex& complex() const noexcept { return *x_; }
  int degree() const noexcept { return k_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t trials() const noexcept { return trials_; }

  /// Spanning set of Zhat(k)^k: integer span of the first list plus rational span of the second.
  const std::vector<DiffCochain>& cocycle_lattice() const noexcept { return lattice_; }
  const std::vector<DiffCochain>& cocycle_space() const noexcept { return space_; }
  /// Spanning set of the cone cocycles Z(j)^{k-1}.
  std::vector<ConeCochain> cone_cocycle_generators() const;
  /// Q-basis of the closed (k-1)-forms.
  std::vector<WhitneyForm> closed_lower_forms() const;

  DiffCochain random_cocycle(Sampler& rng) const;
  ConeCochain random_cone_cocycle(Sampler& rng) const;
  WhitneyForm random_closed_lower_form(Sampler& rng) const;
  /// Random element of Omega^k_Z.
  WhitneyForm random_integral_form(Sampler& rng) const;

  const CoboundarySolver& dhat_coboundaries() const noexcept { return dhat_b_; }
  const PreparedSubgroup& cone_coboundaries() const noexcept { return cone_b_; }
  const PreparedSubgroup& integral_forms() const noexcept { return omega_z_; }
  const PreparedSubgroup& integral_lower_forms() const noexcept { return omega_z_lower_; }
  const MixedSubgroup& cone_cocycle_lifts() const noexcept { return cone_lifts_; }
  const IntegerSolver& integral_coboundaries() const noexcept { return int_b_; }

  DiffCochain witness_R(const WhitneyForm& w) const;

  /// Class of an integral cocycle in H^k(Z) is zero.
  bool integral_class_is_zero(const Cochain& c) const;
  /// A rational k-cochain is a coboundary.
  bool rational_is_coboundary(const Cochain& t) const;

 private:
  const SimplicialComplex* x_;
  int k_;
  std::uint64_t seed_;
  std::size_t trials_;
  std::vector<IntVector> integral_cocycles_;
  std::vector<DiffCochain> lattice_;
  std::vector<DiffCochain> space_;
  MixedSubgroup cone_lifts_;
  std::vector<RatVector> closed_lower_;
  CoboundarySolver dhat_b_;
  PreparedSubgroup cone_b_;
  PreparedSubgroup omega_z_;
  PreparedSubgroup omega_z_lower_;
  IntegerSolver int_b_;
};

// The verification checks. Each is a pure function of (context, maps).
CheckReport check_faces(const HexagonContext& ctx, const HexagonMaps& maps);
CheckReport check_main_diagonal(const HexagonContext& ctx, const HexagonMaps& maps);
CheckReport check_induced_hexagon(const HexagonContext& ctx, const HexagonMaps& maps);
CheckReport check_bunke_schick(const HexagonContext& ctx, const HexagonMaps& maps);
CheckReport check_off_diagonal_note(const HexagonContext& ctx, const HexagonMaps& maps);
CheckReport check_surjectivity_witnesses(const HexagonContext& ctx, const HexagonMaps& maps);
CheckReport check_character_compatibility(const HexagonContext& ctx);
CheckReport check_derham_identities(const HexagonContext& ctx);
CheckReport check_dhat_squared(const HexagonContext& ctx);
CheckReport check_validate(const HexagonContext& ctx);

}  // namespace hexad
