#include "hexad/catalog.hpp"

#include <stdexcept>

#include "hexad/cohomology.hpp"

namespace hexad {

namespace {

std::vector<Simplex> seven_vertex_torus() {
  std::vector<Simplex> out;
  for (int i = 0; i < 7; ++i) {
    out.push_back({i, (i + 1) % 7, (i + 3) % 7});
    out.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return out;
}

// 3x3 grid; crossing the first seam flips the second coordinate.
std::vector<Simplex> nine_vertex_klein_bottle() {
  auto id = [](int a, int b) {
    if (a == 3) {
      a = 0;
      b = (3 - b % 3) % 3;
    }
    return 3 * a + b % 3;
  };
  std::vector<Simplex> out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const int p = id(a, b), q = id(a + 1, b), r = id(a + 1, b + 1), s = id(a, b + 1);
      out.push_back({p, q, r});
      out.push_back({p, s, r});
    }
  return out;
}

FgAbelianGroup z(std::size_t rank, IntVector torsion = {}) { return FgAbelianGroup{rank, std::move(torsion)}; }

// Homology tables come from tests/oracles/catalog_homology.py.
std::vector<CatalogEntry> build_entries() {
  return {
      {"point", "a single vertex", 1, {{0}}, {z(1)}},
      {"interval", "one edge", 2, {{0, 1}}, {z(1), z(0)}},
      {"circle", "boundary of a triangle", 3, {{0, 1}, {1, 2}, {0, 2}}, {z(1), z(1)}},
      {"sphere", "boundary of the 3-simplex", 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, {z(1), z(0), z(1)}},
      {"torus", "7-vertex torus", 7, seven_vertex_torus(), {z(1), z(2), z(1)}},
      {"projective-plane",
       "6-vertex real projective plane",
       6,
       {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}},
       {z(1), z(0, {2}), z(0)}},
      {"klein-bottle", "9-vertex Klein bottle (twisted 3x3 grid)", 9, nine_vertex_klein_bottle(),
       {z(1), z(1, {2}), z(0)}},
  };
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build_entries();
  return entries;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog_entries()) out.push_back(e.name);
  return out;
}

bool is_catalog_name(std::string_view name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return true;
  return false;
}

SimplicialComplex catalog(std::string_view name) {
  for (const auto& e : catalog_entries()) {
    if (e.name != name) continue;
    SimplicialComplex x = SimplicialComplex::from_facets(e.name, e.vertex_count, e.facets);
    if (static_cast<std::size_t>(x.dimension() + 1) != e.homology.size())
      throw std::logic_error("catalog entry '" + e.name + "' has the wrong dimension");
    for (int k = 0; k <= x.dimension(); ++k) {
      const FgAbelianGroup h = integral_homology(x, k);
      if (!(h == e.homology[static_cast<std::size_t>(k)]))
        throw std::logic_error("catalog entry '" + e.name + "': H_" + std::to_string(k) + " is " + to_string(h) +
                               ", expected " + to_string(e.homology[static_cast<std::size_t>(k)]));
    }
    return x;
  }
  throw std::out_of_range("unknown catalog complex '" + std::string(name) + "'");
}

}  // namespace hexad
