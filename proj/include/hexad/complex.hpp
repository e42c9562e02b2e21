#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hexad/matrix.hpp"

namespace hexad {

/// Strictly increasing vertex indices. Orientation is the one induced by this order.
using Simplex = std::vector<int>;

std::string to_string(const Simplex& s);

struct Violation {
  Simplex simplex;
  std::string message;
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& complex_name, std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Checks face closure, sortedness, uniqueness and vertex existence of an
/// explicit simplex listing. simplices_by_dim[k] holds the k-simplices.
std::vector<Violation> validate(std::size_t vertex_count, const std::vector<std::vector<Simplex>>& simplices_by_dim);

/// A finite abstract simplicial complex. Immutable; boundary and coboundary
/// matrices are built eagerly on construction.
class SimplicialComplex {
 public:
  /// Throws ValidationError listing every violation.
  SimplicialComplex(std::string name, std::size_t vertex_count, std::vector<std::vector<Simplex>> simplices_by_dim);

  /// Adds every face of positive dimension of the given facets. Vertices are
  /// 0..vertex_count-1; a facet mentioning another vertex is reported as a
  /// missing face.
  static SimplicialComplex from_facets(std::string name, std::size_t vertex_count, const std::vector<Simplex>& facets);

  const std::string& name() const noexcept { return name_; }
  std::size_t vertex_count() const noexcept { return vertex_labels_.size(); }
  const std::vector<std::string>& vertex_labels() const noexcept { return vertex_labels_; }

  /// Largest k with a k-simplex; -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(simplices_.size()) - 1; }

  /// Number of k-simplices; zero outside 0..dimension().
  std::size_t count(int k) const noexcept;

  /// k-simplices in lexicographic order; empty outside 0..dimension().
  const std::vector<Simplex>& simplices(int k) const noexcept;

  std::optional<std::size_t> index_of(const Simplex& s) const;

  /// Maximal simplices, sorted by dimension then lexicographically.
  std::vector<Simplex> facets() const;

  /// Boundary operator C_k -> C_{k-1}: count(k-1) x count(k). Requires 1 <= k <= dimension().
  const IntMatrix& boundary_matrix(int k) const;

  /// Coboundary operator C^k -> C^{k+1}: count(k+1) x count(k), for any k.
  /// Outside -1..dimension() the cochain groups are zero.
  const IntMatrix& coboundary_matrix(int k) const;

 private:
  std::string name_;
  std::vector<std::string> vertex_labels_;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, std::size_t>> index_;
  std::vector<IntMatrix> boundary_;    // entry k-1 holds boundary_matrix(k)
  std::vector<IntMatrix> coboundary_;  // entry k+1 holds coboundary_matrix(k)
  IntMatrix empty_;
};

}  // namespace hexad
