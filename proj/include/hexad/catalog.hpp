#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hexad/complex.hpp"
#include "hexad/mixed_subgroup.hpp"

namespace hexad {

struct CatalogEntry {
  std::string name;
  std::string description;
  std::size_t vertex_count = 0;
  std::vector<Simplex> facets;
  std::vector<FgAbelianGroup> homology;  // H_0, H_1, ..., H_dim over Z
};

const std::vector<CatalogEntry>& catalog_entries();
std::vector<std::string> catalog_names();
bool is_catalog_name(std::string_view name);

/// Builds a catalog complex and checks its homology against the stored table.
/// Throws std::out_of_range for an unknown name and std::logic_error on a
/// homology mismatch.
SimplicialComplex catalog(std::string_view name);

}  // namespace hexad
