#include "hexad/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hexad/catalog.hpp"
#include "hexad/cohomology.hpp"
#include "hexad/errors.hpp"
#include "hexad/io.hpp"
#include "hexad/serialize.hpp"
#include "hexad/verify.hpp"

namespace hexad {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string command;
  std::string complex;
  std::vector<int> degrees;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::string report;
  std::string format;
  std::vector<std::string> files;
};

// Exit code 2 with a message.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<fs::path> user_catalog_dir() {
  const char* dir = std::getenv("HEXAD_CATALOG_DIR");
  if (!dir || !*dir) return std::nullopt;
  return fs::path(dir);
}

SimplicialComplex resolve_complex(const std::string& name) {
  if (name.empty()) throw UsageError("--complex is required");
  if (is_catalog_name(name)) return catalog(name);
  if (auto dir = user_catalog_dir()) {
    const fs::path p = *dir / (name + ".cplx");
    if (fs::is_regular_file(p)) return load_complex(p.string());
  }
  if (fs::is_regular_file(name)) return load_complex(name);
  throw UsageError("unknown complex '" + name + "' (not a catalog name or a readable file)");
}

std::vector<int> degrees_for(const SimplicialComplex& x, const RunConfig& cfg, int lowest) {
  std::vector<int> ds = cfg.degrees;
  if (ds.empty())
    for (int k = 1; k <= x.dimension() + 1; ++k) ds.push_back(k);
  for (int k : ds)
    if (k < lowest || k > x.dimension() + 1)
      throw UsageError("degree " + std::to_string(k) + " outside " + std::to_string(lowest) + ".." +
                       std::to_string(x.dimension() + 1) + " for complex '" + x.name() + "'");
  return ds;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.report.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.report, std::ios::binary);
  if (!f) throw UsageError("cannot write report '" + cfg.report + "'");
  f << text;
}

Json unwrap(Json items) { return items.size() == 1 ? items[0] : items; }

std::string counts_string(const SimplicialComplex& x) {
  std::string s = "[";
  for (int k = 0; k <= x.dimension(); ++k) s += (k ? ", " : "") + std::to_string(x.count(k));
  return s + "]";
}

int cmd_catalog(const RunConfig& cfg, std::ostream& out) {
  Json list = Json::array();
  auto add = [&](const SimplicialComplex& x, const std::string& description, const std::string& source) {
    Json e{{"name", x.name()}, {"source", source}, {"description", description}, {"dimension", x.dimension()},
           {"simplices", Json::array()}, {"homology", Json::array()}};
    for (int k = 0; k <= x.dimension(); ++k) {
      e["simplices"].push_back(x.count(k));
      e["homology"].push_back(to_string(integral_homology(x, k)));
    }
    list.push_back(e);
  };
  for (const auto& entry : catalog_entries()) add(catalog(entry.name), entry.description, "builtin");
  if (auto dir = user_catalog_dir(); dir && fs::is_directory(*dir)) {
    std::vector<fs::path> files;
    for (const auto& f : fs::directory_iterator(*dir))
      if (f.path().extension() == ".cplx") files.push_back(f.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) add(load_complex(f.string()), "", f.string());
  }
  if (cfg.format == "json") {
    emit(cfg, list.dump(2) + "\n", out);
    return 0;
  }
  std::ostringstream s;
  for (const auto& e : list) {
    s << std::left << std::setw(18) << e["name"].get<std::string>() << " dim " << e["dimension"].get<int>() << "  simplices "
      << e["simplices"].dump() << "  H_*(Z):";
    for (const auto& h : e["homology"]) s << " " << h.get<std::string>() << ";";
    if (!e["description"].get<std::string>().empty()) s << "  " << e["description"].get<std::string>();
    s << "\n";
  }
  emit(cfg, s.str(), out);
  return 0;
}

Json compute_degree(const SimplicialComplex& x, int k) {
  Json j{{"degree", k},
         {"H^k(Z)", to_string(integral_cohomology(x, k))},
         {"H^k(Q) rank", rational_cohomology_rank(x, k)},
         {"H^k(Q/Z)", to_string(qmodz_cohomology(x, k))},
         {"H_k(Z)", to_string(integral_homology(x, k))}};
  // Periods of the Whitney forms of an integral cocycle basis over a homology basis.
  const HomologyBasis h = homology_basis(x, k);
  Json periods = Json::array();
  for (const auto& z : integral_cocycle_basis(x, k)) {
    const WhitneyForm w = whitney(include_coefficients(Cochain::from_integers(k, z)));
    Json row{{"cocycle", to_json(z)}, {"periods", to_json(period_vector(x, w, h).periods)}};
    Json tors = Json::array();
    for (const auto& c : h.torsion_cycles) tors.push_back(to_string(integrate(w, c)));
    row["torsion_periods"] = tors;
    periods.push_back(row);
  }
  j["free_cycles"] = h.free_cycles.size();
  j["torsion_cycles"] = h.torsion_cycles.size();
  j["periods"] = periods;
  return j;
}

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  const SimplicialComplex x = resolve_complex(cfg.complex);
  std::vector<int> ds = cfg.degrees;
  if (ds.empty())
    for (int k = 0; k <= x.dimension(); ++k) ds.push_back(k);
  for (int k : ds)
    if (k < 0 || k > x.dimension() + 1) throw UsageError("degree " + std::to_string(k) + " outside 0.." + std::to_string(x.dimension() + 1));
  Json items = Json::array();
  for (int k : ds) {
    Json j{{"complex", x.name()}, {"simplices", counts_string(x)}};
    const Json data = compute_degree(x, k);
    for (const auto& [key, v] : data.items()) j[key] = v;
    items.push_back(j);
  }
  if (cfg.format == "json") {
    emit(cfg, unwrap(items).dump(2) + "\n", out);
    return 0;
  }
  std::ostringstream s;
  s << "complex " << x.name() << "  simplices " << counts_string(x) << "\n";
  s << std::left << std::setw(4) << "k" << std::setw(14) << "H^k(Z)" << std::setw(12) << "H^k(Q)" << std::setw(22) << "H^k(Q/Z)"
    << "H_k(Z)\n";
  for (const auto& j : items)
    s << std::setw(4) << j["degree"].get<int>() << std::setw(14) << j["H^k(Z)"].get<std::string>() << std::setw(12)
      << ("Q^" + std::to_string(j["H^k(Q) rank"].get<std::size_t>())) << std::setw(22) << j["H^k(Q/Z)"].get<std::string>()
      << j["H_k(Z)"].get<std::string>() << "\n";
  for (const auto& j : items) {
    for (const auto& p : j["periods"]) {
      s << "  k=" << j["degree"].get<int>() << " cocycle " << p["cocycle"].dump() << " periods " << p["periods"].dump();
      if (!p["torsion_periods"].empty()) s << " torsion periods " << p["torsion_periods"].dump();
      s << "\n";
    }
  }
  emit(cfg, s.str(), out);
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const SimplicialComplex x = resolve_complex(cfg.complex);
  Json items = Json::array();
  bool failed = false;
  for (int k : degrees_for(x, cfg, 1)) {
    const auto reports = run_checks(x, k, cfg.seed, cfg.trials);
    failed = failed || any_failed(reports);
    items.push_back(degree_report(x, k, cfg.seed, reports));
  }
  if (cfg.format == "text") {
    std::string s;
    for (const auto& j : items) s += text_report(j);
    emit(cfg, s, out);
  } else {
    emit(cfg, unwrap(items).dump(2) + "\n", out);
  }
  return failed ? 1 : 0;
}

Json character_table(const SimplicialComplex& x, const DiffCochain& d) {
  Json t = Json::array();
  const HomologyBasis h = homology_basis(x, d.degree - 1);
  for (const auto& z : h.free_cycles) t.push_back(Json{{"cycle", to_json(z)}, {"value", to_string(evaluate_character(x, d, z))}});
  for (const auto& z : h.torsion_cycles) t.push_back(Json{{"cycle", to_json(z)}, {"value", to_string(evaluate_character(x, d, z))}});
  return t;
}

Json witness_for(const SimplicialComplex& x, int k, const std::string& path) {
  const std::string text = read_file(path);
  const ElementKind kind = detect_element(text, path);
  Json j{{"file", path}, {"kind", std::string(element_kind_name(kind))}};
  const HexagonMaps maps(x);
  const CoboundarySolver solver(x, k);
  auto class_data = [&](const DiffCochain& d) {
    Json c{{"cocycle", is_cocycle(x, d)}};
    if (!c["cocycle"].get<bool>()) return c;
    c["I"] = Json{{"c", to_json(maps.I(d).c)}, {"t", to_json(maps.I(d).t)}};
    c["R"] = to_json(maps.R(d));
    c["characters"] = character_table(x, d);
    const auto pre = solver.preimage(d);
    c["coboundary_preimage"] = pre ? to_json(*pre) : Json(nullptr);
    return c;
  };
  switch (kind) {
    case ElementKind::Form: {
      const WhitneyForm w = parse_form(x, text, path);
      if (w.degree == k) {
        const bool integral = in_omega_integral(x, w);
        j["in_omega_Z"] = integral;
        if (integral) j["R_preimage"] = to_json(witness_R_surjective(x, w));
      } else if (w.degree == k - 1) {
        const DiffCochain d = maps.a(w);
        j["a_image"] = to_json(d);
        j["a_image_class"] = class_data(d);
      } else {
        throw PreconditionError("form degree must be k or k-1");
      }
      break;
    }
    case ElementKind::Cochain: {
      const Cochain c = parse_cochain(x, text, path);
      if (c.degree() == k && c.ring() == Ring::Integer) {
        j["I_preimage"] = to_json(witness_I_surjective(x, c, Cochain::zero(x, k, Ring::Rational)));
      } else if (c.degree() == k && c.ring() == Ring::Rational) {
        j["I_preimage"] = to_json(witness_I_surjective(x, Cochain::zero(x, k, Ring::Integer), c));
      } else if (c.degree() == k - 1 && c.ring() == Ring::RationalModInteger) {
        const Cochain v(k - 1, Ring::Rational, c.values());
        const Cochain dv = coboundary(x, v);
        if (!is_integral(dv.values())) throw PreconditionError("not a Q/Z cocycle");
        const ConeCochain lift{k - 1, Cochain(k, Ring::Integer, dv.values()), v};
        j["cone_lift"] = to_json(lift);
        j["i_image"] = to_json(maps.i(lift));
        j["i_image_class"] = class_data(maps.i(lift));
      } else {
        throw PreconditionError("expected an integer or rational k-cochain, or a QmodZ (k-1)-cochain");
      }
      break;
    }
    case ElementKind::DiffCochain: {
      const DiffCochain d = parse_diff_cochain(x, text, path);
      if (d.level != k || d.degree != k) throw PreconditionError("expected level == degree == k");
      j["class"] = class_data(d);
      break;
    }
    case ElementKind::ConeCochain: {
      const ConeCochain z = parse_cone_cochain(x, text, path);
      if (z.degree != k - 1) throw PreconditionError("expected a cone cochain of degree k-1");
      j["cone_cocycle"] = is_cone_cocycle(x, z);
      if (j["cone_cocycle"].get<bool>()) {
        const CocyclePair b = maps.beta(z);
        j["i_image"] = to_json(maps.i(z));
        j["beta"] = Json{{"c", to_json(b.c)}, {"t", to_json(b.t)}};
        j["qmodz_image"] = to_json(cone_to_qmodz(z));
        j["cone_coboundary"] = is_member(mixed_membership(stacked(z), cone_coboundaries(x, k - 1)));
      }
      break;
    }
  }
  return j;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out) {
  const SimplicialComplex x = resolve_complex(cfg.complex);
  if (cfg.degrees.size() != 1) throw UsageError("witness needs exactly one --degree");
  const int k = degrees_for(x, cfg, 1).front();
  if (cfg.files.empty()) throw UsageError("witness needs at least one element file");
  Json items = Json::array();
  for (const auto& f : cfg.files) items.push_back(witness_for(x, k, f));
  Json j{{"complex", x.name()}, {"degree", k}, {"witnesses", items}};
  emit(cfg, (cfg.format == "text" ? j.dump(1) : j.dump(2)) + "\n", out);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the differential cohomology hexagon on simplicial complexes", "hexad"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool degrees) {
    sub->add_option("--complex", cfg.complex, "catalog name or complex file");
    if (degrees) sub->add_option("--degree", cfg.degrees, "degree (repeatable)")->take_all()->allow_extra_args(false);
    sub->add_option("--report", cfg.report, "write output to this file");
    sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "list the built-in complexes");
  add_common(catalog_cmd, false);
  CLI::App* compute_cmd = app.add_subcommand("compute", "cohomology groups and period tables");
  add_common(compute_cmd, true);
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  add_common(verify_cmd, true);
  verify_cmd->add_option("--seed", cfg.seed, "random seed");
  verify_cmd->add_option("--trials", cfg.trials, "random samples per check")->check(CLI::PositiveNumber);
  CLI::App* witness_cmd = app.add_subcommand("witness", "constructive witnesses for elements read from files");
  add_common(witness_cmd, true);
  witness_cmd->add_option("files", cfg.files, "element files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hexad: " << e.what() << "\n";
    return 2;
  }

  for (CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();
  if (cfg.format.empty()) cfg.format = cfg.command == "verify" ? "json" : "text";
  try {
    if (cfg.command == "catalog") return cmd_catalog(cfg, out);
    if (cfg.command == "compute") return cmd_compute(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    return cmd_witness(cfg, out);
  } catch (const ParseError& e) {
    err << "hexad: parse error: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    err << "hexad: invalid complex: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "hexad: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "hexad: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "hexad: error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace hexad
