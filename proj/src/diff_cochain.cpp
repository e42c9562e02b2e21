#include "hexad/diff_cochain.hpp"

#include <sstream>
#include <stdexcept>

#include "hexad/errors.hpp"

namespace hexad {

DiffCochain DiffCochain::zero(const SimplicialComplex& x, int level, int degree) {
  DiffCochain d;
  d.level = level;
  d.degree = degree;
  d.c = Cochain::zero(x, degree, Ring::Integer);
  d.T = Cochain::zero(x, degree - 1, Ring::Rational);
  if (degree >= level) d.omega = WhitneyForm::zero(x, degree);
  return d;
}

bool DiffCochain::is_zero() const { return c.is_zero() && T.is_zero() && (!omega || omega->is_zero()); }

namespace {

void check_compatible(const DiffCochain& a, const DiffCochain& b) {
  if (a.level != b.level || a.degree != b.degree || a.omega.has_value() != b.omega.has_value())
    throw std::invalid_argument("differential cochain arithmetic: level/degree mismatch");
}

}  // namespace

DiffCochain DiffCochain::operator-() const {
  DiffCochain out{level, degree, -c, -T, std::nullopt};
  if (omega) out.omega = -*omega;
  return out;
}

DiffCochain operator+(const DiffCochain& a, const DiffCochain& b) {
  check_compatible(a, b);
  DiffCochain out{a.level, a.degree, a.c + b.c, a.T + b.T, std::nullopt};
  if (a.omega) out.omega = *a.omega + *b.omega;
  return out;
}

DiffCochain operator-(const DiffCochain& a, const DiffCochain& b) { return a + (-b); }

std::string to_string(const DiffCochain& x) {
  std::ostringstream out;
  out << "(c=" << to_string(x.c) << ", T=" << to_string(x.T);
  if (x.omega) out << ", omega=" << to_string(*x.omega);
  out << ")";
  return out.str();
}

void check_shape(const SimplicialComplex& x, const DiffCochain& d) {
  if (d.c.degree() != d.degree || d.c.ring() != Ring::Integer)
    throw std::invalid_argument("differential cochain: c must be an integral cochain of degree k");
  if (d.T.degree() != d.degree - 1 || d.T.ring() != Ring::Rational)
    throw std::invalid_argument("differential cochain: T must be a real cochain of degree k-1");
  if (d.has_form() != d.omega.has_value())
    throw std::invalid_argument("differential cochain: form slot present iff degree >= level");
  check_fits(x, d.c);
  check_fits(x, d.T);
  if (d.omega && (d.omega->degree != d.degree || d.omega->coefficients.size() != x.count(d.degree)))
    throw std::invalid_argument("differential cochain: omega must be a form of degree k");
}

DiffCochain dhat(const SimplicialComplex& x, const DiffCochain& d) {
  check_shape(x, d);
  DiffCochain out;
  out.level = d.level;
  out.degree = d.degree + 1;
  out.c = coboundary(x, d.c);
  Cochain t = -include_coefficients(d.c) - coboundary(x, d.T);
  if (d.degree >= d.level) {
    out.T = derham_cochain(*d.omega) + t;
    out.omega = exterior_derivative(x, *d.omega);
  } else {
    out.T = std::move(t);
    if (d.degree == d.level - 1) out.omega = WhitneyForm::zero(x, out.degree);
  }
  return out;
}

bool is_cocycle(const SimplicialComplex& x, const DiffCochain& d) { return dhat(x, d).is_zero(); }

RatVector stack(const RatVector& a, const RatVector& b) {
  RatVector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

namespace {

// Columns of dhat restricted to (c', T') in degree level-1, stacked as (c, T).
MixedSubgroup coboundary_subgroup(const SimplicialComplex& x, int level) {
  MixedSubgroup s;
  s.ambient_dim = x.count(level) + x.count(level - 1);
  for (std::size_t j = 0; j < x.count(level - 1); ++j) {
    const Cochain e = Cochain::elementary(x, level - 1, j, Ring::Integer);
    s.lattice_gens.push_back(stack(coboundary(x, e).values(), (-include_coefficients(e)).values()));
  }
  const RatVector zero_c(x.count(level), Rational(0));
  for (std::size_t j = 0; j < x.count(level - 2); ++j) {
    const Cochain f = Cochain::elementary(x, level - 2, j, Ring::Rational);
    s.space_gens.push_back(stack(zero_c, (-coboundary(x, f)).values()));
  }
  return s;
}

}  // namespace

CoboundarySolver::CoboundarySolver(const SimplicialComplex& x, int level)
    : x_(&x), level_(level), solver_(coboundary_subgroup(x, level)) {}

MembershipResult CoboundarySolver::test_components(const DiffCochain& d) const {
  check_shape(*x_, d);
  if (d.level != level_ || d.degree != level_)
    throw PreconditionError("coboundary test requires degree == level == " + std::to_string(level_));
  return solver_.test(stack(d.c.values(), d.T.values()));
}

std::optional<DiffCochain> CoboundarySolver::preimage(const DiffCochain& d) const {
  auto r = test_components(d);
  if (d.omega && !d.omega->is_zero()) return std::nullopt;
  auto* w = std::get_if<MembershipWitness>(&r);
  if (!w) return std::nullopt;
  DiffCochain y;
  y.level = level_;
  y.degree = level_ - 1;
  y.c = Cochain::from_integers(level_ - 1, w->lattice_coeffs);
  y.T = Cochain(level_ - 2, Ring::Rational, w->space_coeffs);
  if (!(dhat(*x_, y) == d)) throw std::logic_error("coboundary witness failed to re-verify");
  return y;
}

std::optional<DiffCochain> find_coboundary_preimage(const SimplicialComplex& x, const DiffCochain& d) {
  return CoboundarySolver(x, d.level).preimage(d);
}

Rational evaluate_character(const SimplicialComplex& x, const DiffCochain& d, const Chain& z) {
  if (d.degree != d.level) throw PreconditionError("evaluate_character: expected degree == level");
  if (!is_cocycle(x, d)) throw PreconditionError("evaluate_character: not a cocycle");
  if (z.degree != d.degree - 1) throw PreconditionError("evaluate_character: cycle has the wrong degree");
  if (!is_zero(boundary(x, z).coeffs)) throw PreconditionError("evaluate_character: chain is not a cycle");
  return mod_one(evaluate(d.T, z));
}

}  // namespace hexad
