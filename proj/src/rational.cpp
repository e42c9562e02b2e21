#include "hexad/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "hexad/matrix.hpp"

namespace hexad {

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw std::domain_error("make_rational: zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

bool is_integral(const Rational& x) { return x.get_den() == 1; }

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational mod_one(const Rational& x) { return x - Rational(floor_of(x)); }

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_num().get_str() + "/" + x.get_den().get_str(); }

namespace {

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw std::invalid_argument("expected digits in '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("invalid number '" + std::string(text) + "'");
  Integer v(std::string(text.substr(pos)), 10);
  return negative ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw std::invalid_argument("denominator must be unsigned in '" + std::string(text) + "'");
  const Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool is_integral(const RatVector& v) {
  for (const auto& x : v)
    if (!is_integral(x)) return false;
  return true;
}

IntVector to_integer(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integral(x)) throw std::invalid_argument("to_integer: non-integral entry " + to_string(x));
    out.push_back(x.get_num());
  }
  return out;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Integer common_denominator(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

namespace {

template <typename V, typename Op>
V zip(const V& a, const V& b, Op op, const char* what) {
  if (a.size() != b.size()) throw std::invalid_argument(std::string(what) + ": length mismatch");
  V out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return out;
}

}  // namespace

RatVector add(const RatVector& a, const RatVector& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); }, "add");
}
RatVector sub(const RatVector& a, const RatVector& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); }, "sub");
}
IntVector add(const IntVector& a, const IntVector& b) {
  return zip(a, b, [](const Integer& x, const Integer& y) { return Integer(x + y); }, "add");
}
IntVector sub(const IntVector& a, const IntVector& b) {
  return zip(a, b, [](const Integer& x, const Integer& y) { return Integer(x - y); }, "sub");
}

RatVector scale(const Rational& s, const RatVector& v) {
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

IntVector scale(const Integer& s, const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

}  // namespace hexad
