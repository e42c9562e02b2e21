// One line per acceptance criterion. Exit status is nonzero when any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "hexad/catalog.hpp"
#include "hexad/cli.hpp"
#include "hexad/cohomology.hpp"
#include "hexad/cone.hpp"
#include "hexad/forms.hpp"
#include "hexad/hexagon.hpp"
#include "hexad/sampling.hpp"
#include "hexad/verify.hpp"
#include "reverify.hpp"
#include "support.hpp"

using namespace hexad;

namespace {

constexpr std::uint64_t seed = 42;
constexpr std::size_t trials = 100;

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

std::string cli(const std::vector<std::string>& args, int& code) {
  std::vector<const char*> argv{"hexad"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str() + err.str();
}

// Full verify run per catalog complex, done twice through the command line.
struct SuiteRuns {
  std::map<std::string, std::string> first, second;
  std::map<std::string, int> codes;
  // (complex, degree, check) -> report
  std::map<std::tuple<std::string, int, std::string>, Json> reports;
};

SuiteRuns run_suite() {
  SuiteRuns s;
  for (const auto& name : catalog_names()) {
    const std::vector<std::string> args{"verify", "--complex", name, "--seed", std::to_string(seed), "--trials",
                                        std::to_string(trials), "--format", "json"};
    int code = 0, again = 0;
    s.first[name] = cli(args, code);
    s.second[name] = cli(args, again);
    s.codes[name] = code == 0 && again == 0 ? 0 : std::max(code, again);
    Json j = Json::parse(s.first[name]);
    if (!j.is_array()) j = Json::array({j});
    for (const auto& d : j)
      for (const auto& c : d["checks"]) s.reports[{name, d["degree"].get<int>(), c["name"].get<std::string>()}] = c;
  }
  return s;
}

// Every (complex, degree) report of one check has status PASS.
void all_pass(const SuiteRuns& s, const std::string& check, Outcome& o, std::size_t& count) {
  for (const auto& [key, r] : s.reports) {
    if (std::get<2>(key) != check) continue;
    ++count;
    o.require(r["status"] == "PASS", check + " " + r["status"].get<std::string>() + " on " + std::get<0>(key) +
                                         " k=" + std::to_string(std::get<1>(key)));
  }
  o.require(count > 0, "no " + check + " reports");
}

const Json& report(const SuiteRuns& s, const std::string& name, int k, const std::string& check) {
  return s.reports.at({name, k, check});
}

Outcome differentials_square_to_zero(const SuiteRuns& s) {
  Outcome o;
  std::size_t n = 0, m = 0, elements = 0;
  all_pass(s, "dhat_squared", o, n);
  all_pass(s, "cone_differential_squared", o, m);
  Sampler rng(derive_seed(seed, "acceptance-differentials"));
  for (const auto& name : catalog_names()) {
    const SimplicialComplex x = catalog(name);
    for (int k = 0; k <= x.dimension() + 1; ++k) {
      for (int q = 0; q <= x.dimension() + 2; ++q) {
        for (std::size_t t = 0; t < trials; ++t) {
          DiffCochain d = DiffCochain::zero(x, q, k);
          d.c = rng.integer_cochain(x, k);
          d.T = rng.rational_cochain(x, k - 1);
          if (d.has_form()) d.omega = rng.form(x, k);
          o.require(dhat(x, dhat(x, d)).is_zero(), "dhat^2 != 0 on " + name);
          ++elements;
        }
      }
      for (std::size_t t = 0; t < trials; ++t) {
        const ConeCochain e{k - 1, rng.integer_cochain(x, k), rng.rational_cochain(x, k - 1)};
        o.require(delta_cone(x, delta_cone(x, e)) == ConeCochain::zero(x, k + 1), "cone delta^2 != 0 on " + name);
        ++elements;
      }
    }
  }
  if (o.ok) o.note = std::to_string(n + m) + " suite reports, " + std::to_string(elements) + " extra random elements";
  return o;
}

Outcome simple(const SuiteRuns& s, const std::vector<std::string>& checks) {
  Outcome o;
  std::size_t n = 0;
  for (const auto& c : checks) all_pass(s, c, o, n);
  if (o.ok) o.note = std::to_string(n) + " reports";
  return o;
}

Outcome main_diagonal(const SuiteRuns& s) {
  Outcome o = simple(s, {"main_diagonal"});
  for (const auto& [key, r] : s.reports) {
    if (std::get<2>(key) != "main_diagonal") continue;
    const auto& d = r["details"];
    o.require(d["kernel_samples"].get<long>() >= 25, "fewer than 25 kernel samples on " + std::get<0>(key));
    o.require(d["i_kernel_dimension"].get<long>() == 0, "i has a kernel on " + std::get<0>(key));
    o.require(d["a_kernel_dimension"].get<long>() == 0, "a has a kernel on " + std::get<0>(key));
  }
  return o;
}

Outcome surjectivity(const SuiteRuns& s) {
  Outcome o = simple(s, {"surjectivity_witnesses"});
  for (const auto& [key, r] : s.reports) {
    if (std::get<2>(key) != "surjectivity_witnesses") continue;
    o.require(r["details"]["R_targets"].get<long>() >= 25, "fewer than 25 R targets on " + std::get<0>(key));
    o.require(r["details"]["I_targets"].get<long>() >= 25, "fewer than 25 I targets on " + std::get<0>(key));
  }
  return o;
}

Outcome descent(const SuiteRuns& s) {
  Outcome o = simple(s, {"induced_hexagon"});
  // Values frozen from the independent oracle script.
  const auto h = [&](const char* name, int k) {
    return report(s, name, k, "induced_hexagon")["details"]["H^k(Z)"].get<std::string>();
  };
  o.require(h("circle", 1) == to_string(FgAbelianGroup{1, {}}), "H^1(circle) = " + h("circle", 1));
  o.require(h("projective-plane", 2) == to_string(FgAbelianGroup{0, {Integer(2)}}),
            "H^2(projective plane) = " + h("projective-plane", 2));
  o.require(h("torus", 1) == to_string(FgAbelianGroup{2, {}}), "H^1(torus) = " + h("torus", 1));
  o.require(report(s, "projective-plane", 2, "induced_hexagon")["details"]["torsion_classes_hit_by_I"].get<long>() > 0,
            "no torsion class reached on the projective plane");
  if (o.ok) o.note += "; H^1(S^1)=Z, H^2(RP^2)=Z/2, H^1(T^2)=Z^2";
  return o;
}

Outcome mapping_cone(const SuiteRuns& s) {
  Outcome o = simple(s, {"cone_comparison", "les_exactness"});
  for (const char* name : {"projective-plane", "klein-bottle"}) {
    const SimplicialComplex x = catalog(name);
    o.require(qmodz_cohomology(x, 1).finite_part == IntVector{Integer(2)}, std::string("no 2-torsion in H^1 on ") + name);
    const CheckReport r = cone_comparison(x, 1, trials, seed);
    o.require(r.status == Status::Pass, std::string("cone comparison on ") + name);
    o.require(r.details.at("nontrivial_targets").get<long>() > 0, std::string("no torsion target on ") + name);
  }
  o.require(report(s, "projective-plane", 2, "les_exactness")["details"]["nontrivial_gamma_images"].get<long>() > 0,
            "no nontrivial gamma image on the projective plane");
  return o;
}

Outcome derham(const SuiteRuns& s) {
  Outcome o = simple(s, {"derham_identities"});
  o.require(report(s, "projective-plane", 1, "derham_identities")["details"]["torsion_cycles"].get<long>() > 0,
            "no torsion cycle tested on the projective plane");
  return o;
}

Outcome bunke_schick(const SuiteRuns& s) {
  Outcome o = simple(s, {"bunke_schick"});
  const SimplicialComplex x = catalog("circle");
  const HexagonContext ctx(x, 2, seed, 1);
  const WhitneyForm one = WhitneyForm::elementary(x, 1, 0);
  const auto pre = ctx.dhat_coboundaries().preimage(map_a(x, one));
  o.require(pre && dhat(x, *pre) == map_a(x, one), "period-1 form does not die under a");
  o.require(!ctx.dhat_coboundaries().preimage(map_a(x, make_rational(1, 2) * one)), "period-1/2 form dies under a");
  return o;
}

Outcome mutations() {
  Outcome o;
  const SimplicialComplex x = catalog("circle");
  std::string caught;
  for (HexMap m : all_hex_maps) {
    HexagonMaps maps(x);
    maps.flip(m);
    const auto reports = run_checks(x, 1, seed, 20, maps);
    std::size_t failing = 0;
    for (const auto& r : reports) failing += r.failed();
    o.require(failing > 0, "flip of " + std::string(map_name(m)) + " not detected");
    for (const auto& r : reports)
      if (r.name == "faces" && r.failed())
        o.require(r.counterexample && testing_support::reverifies(x, maps, *r.counterexample),
                  "counterexample for " + std::string(map_name(m)) + " does not re-verify");
    caught += std::string(caught.empty() ? "" : " ") + std::string(map_name(m)) + ":" + std::to_string(failing);
  }
  if (o.ok) o.note = "failing checks per flip " + caught;
  return o;
}

Outcome determinism(const SuiteRuns& s) {
  Outcome o;
  for (const auto& [name, text] : s.first) {
    o.require(text == s.second.at(name), "reports differ on " + name);
    o.require(s.codes.at(name) == 0, "verify exit code " + std::to_string(s.codes.at(name)) + " on " + name);
  }
  if (o.ok) o.note = std::to_string(s.first.size()) + " complexes";
  return o;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const SuiteRuns s = run_suite();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"differentials square to zero", [&] { return differentials_square_to_zero(s); }},
      {"hexagon faces commute", [&] { return simple(s, {"faces"}); }},
      {"main diagonal exact, i and a injective", [&] { return main_diagonal(s); }},
      {"constructive surjectivity of R and I", [&] { return surjectivity(s); }},
      {"descent to cohomology and group facts", [&] { return descent(s); }},
      {"character compatibility", [&] { return simple(s, {"character_compatibility"}); }},
      {"mapping cone comparison and long exact sequence", [&] { return mapping_cone(s); }},
      {"de Rham and Whitney identities", [&] { return derham(s); }},
      {"form node exactness and the curvature square", [&] { return bunke_schick(s); }},
      {"single-sign mutations are detected", [] { return mutations(); }},
      {"verify reports are deterministic", [&] { return determinism(s); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.ok;
    std::printf("%s  %2zu  %s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.note.empty() ? "" : ("  (" + o.note + ")").c_str());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("acceptance: %s in %.1f s\n", all ? "all criteria met" : "some criteria not met", seconds);
  return all ? 0 : 1;
}
