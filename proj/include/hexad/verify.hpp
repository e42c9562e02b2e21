#pragma once

#include <cstdint>
#include <vector>

#include "hexad/hexagon.hpp"

namespace hexad {

/// Every check for one (complex, degree), sorted by name. Checks run
/// concurrently; the result does not depend on scheduling.
std::vector<CheckReport> run_checks(const SimplicialComplex& x, int k, std::uint64_t seed, std::size_t trials);
std::vector<CheckReport> run_checks(const SimplicialComplex& x, int k, std::uint64_t seed, std::size_t trials,
                                    const HexagonMaps& maps);

bool any_failed(const std::vector<CheckReport>& reports);

/// {complex, degree, seed, checks: [...]}
Json degree_report(const SimplicialComplex& x, int k, std::uint64_t seed, const std::vector<CheckReport>& reports);

/// Human-readable rendering of one degree report.
std::string text_report(const Json& report);

}  // namespace hexad
