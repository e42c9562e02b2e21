#pragma once

#include <random>

#include "hexad/matrix.hpp"
#include "hexad/rational.hpp"
#include "oracle.hpp"

namespace testing_support {

inline hexad::IntMatrix to_int_matrix(const oracle::Mat& m, std::size_t cols_if_empty = 0) {
  const std::size_t cols = m.empty() ? cols_if_empty : m[0].size();
  hexad::IntMatrix out(m.size(), cols);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = hexad::Integer(static_cast<long>(m[i][j]));
  return out;
}

inline hexad::Rational q(long n, long d = 1) { return hexad::make_rational(n, d); }

inline hexad::RatVector qv(std::initializer_list<hexad::Rational> xs) { return hexad::RatVector(xs); }

inline hexad::IntVector zv(std::initializer_list<long> xs) {
  hexad::IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace testing_support
