#include "hexad/smith.hpp"

#include <algorithm>
#include <stdexcept>

#include "hexad/linsolve.hpp"

namespace hexad {

namespace {

struct Reducer {
  IntMatrix d, u, v;

  void swap_rows(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    d.add_row_multiple(dst, src, f);
    u.add_row_multiple(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    d.add_col_multiple(dst, src, f);
    v.add_col_multiple(dst, src, f);
  }

  // Position of the smallest nonzero |entry| in the trailing block, if any.
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j) {
        const Integer& x = d(i, j);
        if (x == 0) continue;
        if (!found || abs(x) < best) {
          best = abs(x);
          pi = i;
          pj = j;
          found = true;
          if (best == 1) return true;
        }
      }
    return found;
  }

  // Clears row t and column t outside the pivot; returns false when a
  // remainder forced a smaller pivot into place (caller must loop).
  bool clear_cross(std::size_t t) {
    for (std::size_t i = t + 1; i < d.rows(); ++i) {
      if (d(i, t) == 0) continue;
      const Integer q = d(i, t) / d(t, t);
      add_row(i, t, -q);
      if (d(i, t) != 0) {
        swap_rows(i, t);
        return false;
      }
    }
    for (std::size_t j = t + 1; j < d.cols(); ++j) {
      if (d(t, j) == 0) continue;
      const Integer q = d(t, j) / d(t, t);
      add_col(j, t, -q);
      if (d(t, j) != 0) {
        swap_cols(j, t);
        return false;
      }
    }
    return true;
  }

  // Row index of an entry in the trailing block not divisible by the pivot.
  bool find_indivisible(std::size_t t, std::size_t& row) const {
    for (std::size_t i = t + 1; i < d.rows(); ++i)
      for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (d(i, j) % d(t, t) != 0) {
          row = i;
          return true;
        }
    return false;
  }
};

}  // namespace

IntVector SmithForm::invariant_factors() const {
  IntVector out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
  return out;
}

SmithForm snf(const IntMatrix& m) {
  Reducer r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!r.find_pivot(t, pi, pj)) break;
    r.swap_rows(t, pi);
    r.swap_cols(t, pj);
    for (;;) {
      if (!r.clear_cross(t)) continue;
      std::size_t row = 0;
      if (r.find_indivisible(t, row)) {
        r.add_row(t, row, Integer(1));
        continue;
      }
      break;
    }
    if (r.d(t, t) < 0) {
      r.d.negate_row(t);
      r.u.negate_row(t);
    }
  }
  return SmithForm{std::move(r.u), std::move(r.d), std::move(r.v), t};
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer x = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = x;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  const std::size_t n = u.rows();
  if (u.cols() != n) throw std::invalid_argument("unimodular_inverse: matrix not square");
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = Rational(u(i, j));
    aug(i, n + i) = 1;
  }
  const Echelon e = rref(std::move(aug));
  if (e.pivots.size() != n || (n > 0 && e.pivots.back() != n - 1))
    throw std::invalid_argument("unimodular_inverse: matrix is singular");
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = e.reduced(i, n + j);
      if (!is_integral(x)) throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
      inv(i, j) = x.get_num();
    }
  return inv;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  const SmithForm f = snf(a);
  std::vector<IntVector> basis;
  for (std::size_t j = f.rank; j < a.cols(); ++j) basis.push_back(f.V.column(j));
  return basis;
}

IntegerSolver::IntegerSolver(IntMatrix a) : a_(std::move(a)), form_(snf(a_)) {}

std::variant<IntVector, LatticeObstruction> IntegerSolver::solve(const IntVector& b) const {
  if (b.size() != a_.rows()) throw std::invalid_argument("integer_solve: dimension mismatch");
  const IntVector c = form_.U.apply(b);
  IntVector y(a_.cols(), Integer(0));
  for (std::size_t i = 0; i < a_.rows(); ++i) {
    if (i < form_.rank) {
      const Integer& di = form_.D(i, i);
      if (c[i] % di != 0) {
        RatVector phi(a_.rows());
        for (std::size_t j = 0; j < a_.rows(); ++j) phi[j] = make_rational(form_.U(i, j), di);
        return LatticeObstruction{std::move(phi)};
      }
      y[i] = c[i] / di;
    } else if (c[i] != 0) {
      RatVector phi(a_.rows());
      for (std::size_t j = 0; j < a_.rows(); ++j) phi[j] = make_rational(form_.U(i, j), 2 * c[i]);
      return LatticeObstruction{std::move(phi)};
    }
  }
  return form_.V.apply(y);
}

std::optional<IntVector> integer_solve(const IntMatrix& a, const IntVector& b) {
  auto r = IntegerSolver(a).solve(b);
  if (auto* x = std::get_if<IntVector>(&r)) return std::move(*x);
  return std::nullopt;
}

bool verify_obstruction(const IntMatrix& a, const IntVector& b, const LatticeObstruction& obstruction) {
  if (obstruction.functional.size() != a.rows() || b.size() != a.rows()) return false;
  const RatMatrix ar = to_rational(a);
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!is_integral(dot(obstruction.functional, ar.column(j)))) return false;
  return !is_integral(dot(obstruction.functional, to_rational(b)));
}

}  // namespace hexad
