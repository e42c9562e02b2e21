#include "hexad/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <iomanip>
#include <sstream>

namespace hexad {

std::vector<CheckReport> run_checks(const SimplicialComplex& x, int k, std::uint64_t seed, std::size_t trials) {
  return run_checks(x, k, seed, trials, HexagonMaps(x));
}

std::vector<CheckReport> run_checks(const SimplicialComplex& x, int k, std::uint64_t seed, std::size_t trials,
                                    const HexagonMaps& maps) {
  const HexagonContext ctx(x, k, seed, trials);
  std::vector<std::function<CheckReport()>> tasks{
      [&] { return check_validate(ctx); },
      [&] { return check_dhat_squared(ctx); },
      [&] { return cone_differential_squared(x, k - 1, trials, seed); },
      [&] { return check_faces(ctx, maps); },
      [&] { return check_main_diagonal(ctx, maps); },
      [&] { return check_surjectivity_witnesses(ctx, maps); },
      [&] { return check_induced_hexagon(ctx, maps); },
      [&] { return check_bunke_schick(ctx, maps); },
      [&] { return check_off_diagonal_note(ctx, maps); },
      [&] { return check_character_compatibility(ctx); },
      [&] { return check_derham_identities(ctx); },
      [&] { return cone_comparison(x, k - 1, trials, seed); },
      [&] { return les_exactness(x, k - 1, trials, seed); },
  };
  std::vector<std::future<CheckReport>> running;
  for (auto& t : tasks) running.push_back(std::async(std::launch::async, t));
  std::vector<CheckReport> out;
  for (auto& f : running) out.push_back(f.get());
  std::sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
  return out;
}

bool any_failed(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.failed(); });
}

Json degree_report(const SimplicialComplex& x, int k, std::uint64_t seed, const std::vector<CheckReport>& reports) {
  Json j = Json::object();
  j["complex"] = x.name();
  j["degree"] = k;
  j["seed"] = seed;
  j["checks"] = Json::array();
  for (const auto& r : reports) j["checks"].push_back(to_json(r));
  return j;
}

std::string text_report(const Json& report) {
  std::ostringstream out;
  out << "complex " << report["complex"].get<std::string>() << "  degree " << report["degree"].get<int>() << "  seed "
      << report["seed"].get<std::uint64_t>() << "\n";
  for (const auto& c : report["checks"]) {
    out << "  " << std::left << std::setw(34) << c["status"].get<std::string>() << std::setw(26)
        << c["name"].get<std::string>() << "witnesses " << c["witness_count"].get<std::size_t>() << "\n";
    if (c.contains("counterexample")) out << "    counterexample: " << c["counterexample"].dump() << "\n";
  }
  return out.str();
}

}  // namespace hexad
