#pragma once

#include "hexad/cochain.hpp"
#include "hexad/cohomology.hpp"

namespace hexad {

/// Piecewise-linear (Whitney) k-form, stored as coordinates in the elementary
/// Whitney basis {w_sigma}. The basis is normalized so that the integral of
/// w_sigma over tau is 1 when tau == sigma and 0 otherwise; integration is
/// then the identity in coordinates and d acts by the coboundary matrix.
struct WhitneyForm {
  int degree = 0;
  RatVector coefficients;

  static WhitneyForm zero(const SimplicialComplex& x, int degree);
  static WhitneyForm elementary(const SimplicialComplex& x, int degree, std::size_t index);

  bool is_zero() const { return hexad::is_zero(coefficients); }

  WhitneyForm operator-() const;
  friend WhitneyForm operator+(const WhitneyForm& a, const WhitneyForm& b);
  friend WhitneyForm operator-(const WhitneyForm& a, const WhitneyForm& b);
  friend WhitneyForm operator*(const Rational& s, const WhitneyForm& a);
  friend bool operator==(const WhitneyForm&, const WhitneyForm&) = default;
};

std::string to_string(const WhitneyForm& w);

/// Periods of a closed k-form over the free homology basis cycles.
struct PeriodVector {
  int degree = 0;
  RatVector periods;
};

WhitneyForm exterior_derivative(const SimplicialComplex& x, const WhitneyForm& w);
bool is_closed(const SimplicialComplex& x, const WhitneyForm& w);

/// Integral of w over an integral chain; throws on degree mismatch.
Rational integrate(const WhitneyForm& w, const Chain& c);

/// The rational cochain sigma -> integral of w over sigma.
Cochain derham_cochain(const WhitneyForm& w);

/// Whitney map from rational cochains; a right inverse of derham_cochain.
WhitneyForm whitney(const Cochain& c);

/// Throws PreconditionError for a non-closed form.
PeriodVector period_vector(const SimplicialComplex& x, const WhitneyForm& w, const HomologyBasis& basis);
PeriodVector period_vector(const SimplicialComplex& x, const WhitneyForm& w);

/// Membership in the closed forms with integral periods. Throws PreconditionError for a non-closed form.
bool has_integral_periods(const SimplicialComplex& x, const WhitneyForm& w, const HomologyBasis& basis);
bool has_integral_periods(const SimplicialComplex& x, const WhitneyForm& w);

/// eta with derham_cochain(d eta) == t. Solves delta y = t over Q (first
/// solution in elimination order) and returns whitney(y). Throws NotExact.
WhitneyForm find_primitive(const SimplicialComplex& x, const Cochain& t);

/// Closed form representing the class of a rational cocycle u: whitney(u).
/// Throws PreconditionError when u is not a cocycle.
WhitneyForm derham_representative(const SimplicialComplex& x, const Cochain& u);

}  // namespace hexad
