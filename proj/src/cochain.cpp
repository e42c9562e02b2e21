#include "hexad/cochain.hpp"

#include <sstream>
#include <stdexcept>

namespace hexad {

std::string_view ring_name(Ring r) {
  switch (r) {
    case Ring::Integer: return "Z";
    case Ring::Rational: return "Q";
    case Ring::RationalModInteger: return "QmodZ";
  }
  return "?";
}

Ring parse_ring(std::string_view name) {
  if (name == "Z") return Ring::Integer;
  if (name == "Q") return Ring::Rational;
  if (name == "QmodZ") return Ring::RationalModInteger;
  throw std::invalid_argument("unknown ring '" + std::string(name) + "' (expected Z, Q or QmodZ)");
}

Cochain::Cochain(int degree, Ring ring, RatVector values) : degree_(degree), ring_(ring), values_(std::move(values)) {
  if (ring_ == Ring::Integer) {
    for (const auto& v : values_)
      if (!is_integral(v)) throw std::invalid_argument("integer cochain with non-integral value " + to_string(v));
  } else if (ring_ == Ring::RationalModInteger) {
    for (auto& v : values_) v = mod_one(v);
  }
}

Cochain Cochain::zero(const SimplicialComplex& x, int degree, Ring ring) {
  return Cochain(degree, ring, RatVector(x.count(degree), Rational(0)));
}

Cochain Cochain::elementary(const SimplicialComplex& x, int degree, std::size_t index, Ring ring) {
  RatVector v(x.count(degree), Rational(0));
  v.at(index) = 1;
  return Cochain(degree, ring, std::move(v));
}

Cochain Cochain::from_integers(int degree, const IntVector& values) {
  return Cochain(degree, Ring::Integer, to_rational(values));
}

IntVector Cochain::integer_values() const {
  if (ring_ != Ring::Integer) throw std::logic_error("integer_values: cochain is not integral");
  return to_integer(values_);
}

bool Cochain::is_zero() const { return hexad::is_zero(values_); }

namespace {

void check_compatible(const Cochain& a, const Cochain& b) {
  if (a.degree() != b.degree() || a.ring() != b.ring() || a.size() != b.size())
    throw std::invalid_argument("cochain arithmetic: degree/ring/size mismatch");
}

}  // namespace

Cochain Cochain::operator-() const { return Cochain(degree_, ring_, scale(Rational(-1), values_)); }

Cochain operator+(const Cochain& a, const Cochain& b) {
  check_compatible(a, b);
  return Cochain(a.degree_, a.ring_, add(a.values_, b.values_));
}

Cochain operator-(const Cochain& a, const Cochain& b) {
  check_compatible(a, b);
  return Cochain(a.degree_, a.ring_, sub(a.values_, b.values_));
}

Cochain operator*(const Rational& s, const Cochain& a) { return Cochain(a.degree_, a.ring_, scale(s, a.values_)); }

std::string to_string(const Cochain& c) {
  std::ostringstream out;
  out << "C^" << c.degree() << "(" << ring_name(c.ring()) << ")[";
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? ", " : "") << to_string(c[i]);
  out << "]";
  return out.str();
}

void check_fits(const SimplicialComplex& x, const Cochain& c) {
  if (c.size() != x.count(c.degree()))
    throw std::invalid_argument("cochain of degree " + std::to_string(c.degree()) + " has " + std::to_string(c.size()) +
                                " values; complex has " + std::to_string(x.count(c.degree())) + " simplices");
}

Cochain coboundary(const SimplicialComplex& x, const Cochain& c) {
  check_fits(x, c);
  const IntMatrix& d = x.coboundary_matrix(c.degree());
  RatVector out(d.rows(), Rational(0));
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (d(i, j) != 0) out[i] += Rational(d(i, j)) * c[j];
  return Cochain(c.degree() + 1, c.ring(), std::move(out));
}

Chain boundary(const SimplicialComplex& x, const Chain& c) {
  if (c.coeffs.size() != x.count(c.degree)) throw std::invalid_argument("boundary: chain does not fit the complex");
  if (c.degree <= 0) return Chain{c.degree - 1, {}};
  return Chain{c.degree - 1, x.boundary_matrix(c.degree).apply(c.coeffs)};
}

Cochain include_coefficients(const Cochain& c) {
  if (c.ring() != Ring::Integer) throw std::invalid_argument("include_coefficients: expected an integer cochain");
  return Cochain(c.degree(), Ring::Rational, c.values());
}

Cochain reduce_mod_one(const Cochain& c) {
  if (c.ring() == Ring::RationalModInteger) return c;
  return Cochain(c.degree(), Ring::RationalModInteger, c.values());
}

Rational evaluate(const Cochain& c, const Chain& z) {
  if (c.degree() != z.degree || c.size() != z.coeffs.size())
    throw std::invalid_argument("evaluate: cochain and chain do not match");
  Rational s = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (z.coeffs[i] != 0) s += c[i] * Rational(z.coeffs[i]);
  return c.ring() == Ring::RationalModInteger ? mod_one(s) : s;
}

Chain elementary_chain(const SimplicialComplex& x, int degree, std::size_t index) {
  IntVector v(x.count(degree), Integer(0));
  v.at(index) = 1;
  return Chain{degree, std::move(v)};
}

}  // namespace hexad
