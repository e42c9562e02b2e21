#include "hexad/linsolve.hpp"

#include <stdexcept>

namespace hexad {

Echelon rref(RatMatrix a) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(row, p);
    const Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      a.add_row_multiple(i, row, Rational(-a(i, col)));
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(a);
  return e;
}

std::size_t rank(const RatMatrix& a) { return rref(a).pivots.size(); }
std::size_t rank(const IntMatrix& a) { return rank(to_rational(a)); }

std::vector<RatVector> nullspace(const RatMatrix& a) {
  const Echelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(a.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> rational_solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("rational_solve: dimension mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const Echelon e = rref(std::move(aug));
  RatVector x(a.cols(), Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

IntVector primitive_integer_vector(const RatVector& v) {
  const Integer den = common_denominator(v);
  IntVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational scaled = v[i] * den;
    out[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace hexad
