#include "hexad/forms.hpp"

#include <sstream>
#include <stdexcept>

#include "hexad/errors.hpp"
#include "hexad/linsolve.hpp"

namespace hexad {

WhitneyForm WhitneyForm::zero(const SimplicialComplex& x, int degree) {
  return WhitneyForm{degree, RatVector(x.count(degree), Rational(0))};
}

WhitneyForm WhitneyForm::elementary(const SimplicialComplex& x, int degree, std::size_t index) {
  WhitneyForm w = zero(x, degree);
  w.coefficients.at(index) = 1;
  return w;
}

namespace {

void check_same_shape(const WhitneyForm& a, const WhitneyForm& b) {
  if (a.degree != b.degree || a.coefficients.size() != b.coefficients.size())
    throw std::invalid_argument("form arithmetic: degree/size mismatch");
}

void check_fits(const SimplicialComplex& x, const WhitneyForm& w) {
  if (w.coefficients.size() != x.count(w.degree))
    throw std::invalid_argument("form of degree " + std::to_string(w.degree) + " does not fit complex '" + x.name() + "'");
}

}  // namespace

WhitneyForm WhitneyForm::operator-() const { return WhitneyForm{degree, scale(Rational(-1), coefficients)}; }

WhitneyForm operator+(const WhitneyForm& a, const WhitneyForm& b) {
  check_same_shape(a, b);
  return WhitneyForm{a.degree, add(a.coefficients, b.coefficients)};
}

WhitneyForm operator-(const WhitneyForm& a, const WhitneyForm& b) {
  check_same_shape(a, b);
  return WhitneyForm{a.degree, sub(a.coefficients, b.coefficients)};
}

WhitneyForm operator*(const Rational& s, const WhitneyForm& a) { return WhitneyForm{a.degree, scale(s, a.coefficients)}; }

std::string to_string(const WhitneyForm& w) {
  std::ostringstream out;
  out << "Omega^" << w.degree << "[";
  for (std::size_t i = 0; i < w.coefficients.size(); ++i) out << (i ? ", " : "") << to_string(w.coefficients[i]);
  out << "]";
  return out.str();
}

WhitneyForm exterior_derivative(const SimplicialComplex& x, const WhitneyForm& w) {
  check_fits(x, w);
  return whitney(coboundary(x, derham_cochain(w)));
}

bool is_closed(const SimplicialComplex& x, const WhitneyForm& w) { return exterior_derivative(x, w).is_zero(); }

Rational integrate(const WhitneyForm& w, const Chain& c) {
  if (w.degree != c.degree || w.coefficients.size() != c.coeffs.size())
    throw std::invalid_argument("integrate: form of degree " + std::to_string(w.degree) + " over chain of degree " +
                                std::to_string(c.degree));
  Rational s = 0;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i)
    if (c.coeffs[i] != 0) s += w.coefficients[i] * Rational(c.coeffs[i]);
  return s;
}

Cochain derham_cochain(const WhitneyForm& w) { return Cochain(w.degree, Ring::Rational, w.coefficients); }

WhitneyForm whitney(const Cochain& c) {
  if (c.ring() != Ring::Rational) throw std::invalid_argument("whitney: expected a rational cochain");
  return WhitneyForm{c.degree(), c.values()};
}

PeriodVector period_vector(const SimplicialComplex& x, const WhitneyForm& w, const HomologyBasis& basis) {
  check_fits(x, w);
  if (basis.degree != w.degree) throw std::invalid_argument("period_vector: homology basis has the wrong degree");
  if (!is_closed(x, w)) throw PreconditionError("period_vector: form is not closed");
  PeriodVector p{w.degree, {}};
  for (const auto& z : basis.free_cycles) p.periods.push_back(integrate(w, z));
  return p;
}

PeriodVector period_vector(const SimplicialComplex& x, const WhitneyForm& w) {
  return period_vector(x, w, homology_basis(x, w.degree));
}

bool has_integral_periods(const SimplicialComplex& x, const WhitneyForm& w, const HomologyBasis& basis) {
  return is_integral(period_vector(x, w, basis).periods);
}

bool has_integral_periods(const SimplicialComplex& x, const WhitneyForm& w) {
  return has_integral_periods(x, w, homology_basis(x, w.degree));
}

WhitneyForm find_primitive(const SimplicialComplex& x, const Cochain& t) {
  if (t.ring() != Ring::Rational) throw std::invalid_argument("find_primitive: expected a rational cochain");
  check_fits(x, t);
  auto y = rational_solve(to_rational(x.coboundary_matrix(t.degree() - 1)), t.values());
  if (!y) throw NotExact("find_primitive: cochain is not a coboundary over Q");
  return WhitneyForm{t.degree() - 1, std::move(*y)};
}

WhitneyForm derham_representative(const SimplicialComplex& x, const Cochain& u) {
  if (u.ring() != Ring::Rational) throw std::invalid_argument("derham_representative: expected a rational cochain");
  check_fits(x, u);
  if (!coboundary(x, u).is_zero()) throw PreconditionError("derham_representative: input is not a cocycle");
  return whitney(u);
}

}  // namespace hexad
