#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hexad {

// Arbitrary-precision scalars. Rationals are the exact stand-in for the reals
// everywhere in this library: every map involved has rational structure
// constants, so identities over Q are identities over R.
using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// p/q in lowest terms; throws std::domain_error when q == 0.
Rational make_rational(const Integer& numerator, const Integer& denominator);

bool is_integral(const Rational& x);

/// Representative of x in [0, 1).
Rational mod_one(const Rational& x);

Integer floor_of(const Rational& x);

/// "p/q" with q > 0; integers print as "p/1".
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Accepts "p", "p/q", with an optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

RatVector to_rational(const IntVector& v);
bool is_integral(const RatVector& v);
/// Throws std::invalid_argument when some entry is not an integer.
IntVector to_integer(const RatVector& v);
bool is_zero(const RatVector& v);
bool is_zero(const IntVector& v);

/// Least common multiple of all denominators (1 for an empty vector).
Integer common_denominator(const RatVector& v);

Rational dot(const RatVector& a, const RatVector& b);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);
RatVector scale(const Rational& s, const RatVector& v);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const Integer& s, const IntVector& v);

}  // namespace hexad
