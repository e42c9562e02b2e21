#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "hexad/complex.hpp"
#include "hexad/rational.hpp"

namespace hexad {

/// Coefficient tag. Integer is the subring A = Z, Rational models R, and
/// RationalModInteger models R/A with representatives in [0, 1).
enum class Ring { Integer, Rational, RationalModInteger };

std::string_view ring_name(Ring r);  // "Z", "Q", "QmodZ"
Ring parse_ring(std::string_view name);

/// Integral chain: one coefficient per k-simplex.
struct Chain {
  int degree = 0;
  IntVector coeffs;

  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Simplex-indexed cochain with a coefficient tag. The constructor enforces the
/// tag: integer values for Integer, and reduction mod 1 for RationalModInteger.
class Cochain {
 public:
  Cochain() = default;
  Cochain(int degree, Ring ring, RatVector values);

  static Cochain zero(const SimplicialComplex& x, int degree, Ring ring);
  static Cochain elementary(const SimplicialComplex& x, int degree, std::size_t index, Ring ring);
  static Cochain from_integers(int degree, const IntVector& values);

  int degree() const noexcept { return degree_; }
  Ring ring() const noexcept { return ring_; }
  const RatVector& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Rational& operator[](std::size_t i) const { return values_[i]; }

  IntVector integer_values() const;  // Integer ring only
  bool is_zero() const;

  Cochain operator-() const;
  friend Cochain operator+(const Cochain& a, const Cochain& b);
  friend Cochain operator-(const Cochain& a, const Cochain& b);
  friend Cochain operator*(const Rational& s, const Cochain& a);  // Rational ring, or integral s
  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  int degree_ = 0;
  Ring ring_ = Ring::Rational;
  RatVector values_;
};

std::string to_string(const Cochain& c);

/// Throws std::invalid_argument unless the cochain matches count(degree) of x.
void check_fits(const SimplicialComplex& x, const Cochain& c);

/// (delta x)(sigma) = x(boundary sigma); ring tag preserved.
Cochain coboundary(const SimplicialComplex& x, const Cochain& c);

Chain boundary(const SimplicialComplex& x, const Chain& c);

/// The coefficient inclusion j_A : C^k(X; Z) -> C^k(X; Q).
Cochain include_coefficients(const Cochain& c);

/// Reduction Q -> Q/Z.
Cochain reduce_mod_one(const Cochain& c);

/// <c, z> = sum c(sigma) z(sigma). For RationalModInteger the result is reduced mod 1.
Rational evaluate(const Cochain& c, const Chain& z);

Chain elementary_chain(const SimplicialComplex& x, int degree, std::size_t index);

}  // namespace hexad
