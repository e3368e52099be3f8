// Command-line driver. Every subcommand prints one JSON document (or text
// with --format text) on stdout. Errors are printed as {"error": {...}} on
// stdout with exit status 2 (bad input), 3 (insolvable), 4 (truncation
// overflow) or 5 (internal). Status 1 means a check ran and failed.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kwall/json_io.hpp"

using namespace kwall;

namespace {

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int exit_code(const Error& e) {
  if (e.kind() == "insolvable") return 3;
  if (e.kind() == "truncation_overflow") return 4;
  return 2;
}

int default_nmax(int d) {
  if (const char* env = std::getenv("KWALL_NMAX")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("KWALL_NMAX must be a positive integer, got '") + env + "'");
  }
  return 2 * d;
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad index list '" + text + "'");
    }
  }
  return out;
}

/// Re-homes a series read from disk into the solver's configuration.
KSeries rehome(const KSeries& s, const SeriesConfig& cfg) {
  if (s.config().d != cfg.d) throw ValidationError("series d does not match the model");
  KSeries out(cfg);
  for (const auto& [m, c] : s) {
    if (m.degree() > cfg.dmax) continue;
    out.add(m, c);
  }
  return out;
}

std::string hyper_text(const std::vector<HypergeometricTerm>& terms) {
  std::ostringstream out;
  for (const auto& t : terms)
    out << t.u_monomial.to_string() << "\tphi_" << t.state << "\t" << t.coefficient.to_string()
        << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact loop-space and wall-crossing computations for Fermat models"};
  app.require_subcommand(1);

  std::string model_path, eps_text = "inf", format = "json", in_path, out_path, baseline_path,
                          f_path, g_path, l0_text;
  int dmax = 1, jmax = -1, nmax = -1, max_d = 24, r = 0, tmin = -2, tmax = 2;

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", model_path, "model JSON {d, weights, name}")->required();
  };
  auto add_window = [&](CLI::App* sub) {
    sub->add_option("--tmin", tmin, "lowest q-power slot of t");
    sub->add_option("--tmax", tmax, "highest q-power slot of t");
  };

  auto* model_cmd = app.add_subcommand("model", "model utilities");
  model_cmd->require_subcommand(1);
  auto* validate = model_cmd->add_subcommand("validate", "check a model and print its data");
  add_model(validate);
  validate->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* ifun = app.add_subcommand("ifun", "hypergeometric part");
  add_model(ifun);
  ifun->add_option("--eps", eps_text, "P/Q or inf");
  ifun->add_option("--dmax", dmax);
  ifun->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* jinf = app.add_subcommand("jinf", "explicit epsilon = infinity series");
  add_model(jinf);
  jinf->add_option("--dmax", dmax);
  add_window(jinf);

  auto* unstable = app.add_subcommand("unstable", "unstable-locus factor and Cech ranks");
  add_model(unstable);
  unstable->add_option("--eps", eps_text)->required();
  unstable->add_option("--r", r)->required();
  unstable->add_option("--l0", l0_text, "comma-separated light indices");

  auto* decompose_cmd = app.add_subcommand("decompose", "K = K+ + K- split of a K element");
  add_model(decompose_cmd);
  decompose_cmd->add_option("--in", in_path)->required();

  auto* omega_cmd = app.add_subcommand("omega", "symplectic form of two K elements");
  add_model(omega_cmd);
  omega_cmd->add_option("--f", f_path)->required();
  omega_cmd->add_option("--g", g_path)->required();

  auto* identity = app.add_subcommand("check-identity", "root-of-unity sum identity sweep");
  identity->add_option("--max-d", max_d);

  auto* solve = app.add_subcommand("solve", "solve for the K- tail");
  add_model(solve);
  solve->add_option("--eps", eps_text);
  solve->add_option("--dmax", dmax);
  solve->add_option("--jmax", jmax, "pole order bound (default dmax + 2)");
  solve->add_option("--nmax", nmax, "cyclotomic order bound (default KWALL_NMAX or 2d)");
  solve->add_option("--baseline", baseline_path, "u-free K- part as a series JSON");
  solve->add_option("--out", out_path);
  add_window(solve);

  auto* verify = app.add_subcommand("verify", "check cone shape and absence of poles");
  add_model(verify);
  verify->add_option("--in", in_path)->required();
  verify->add_option("--nmax", nmax);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*model_cmd) {
      FermatModel model = model_from_json(read_json(model_path));
      Json rep = model_report(model);
      if (format == "text") {
        std::cout << "d = " << model.d() << "\nq = " << rep["q"].get<std::string>()
                  << "\nnar = " << rep["nar"].dump() << "\ndual = " << rep["dual"].dump() << "\n";
      } else {
        emit(rep);
      }
      return 0;
    }
    if (*identity) {
      Json results = Json::object();
      bool all = true;
      for (int d = 1; d <= max_d; ++d) {
        bool ok = verify_ghost_identity(d);
        results[std::to_string(d)] = ok;
        all = all && ok;
      }
      emit(Json{{"max_d", max_d}, {"results", results}, {"all_pass", all}});
      return all ? 0 : 1;
    }

    FermatModel model = model_from_json(read_json(model_path));
    const int d = model.d();

    if (*ifun) {
      EpsilonChamber chamber = EpsilonChamber::parse(eps_text);
      if (dmax < 0) throw ValidationError("dmax must be nonnegative");
      auto terms = hypergeometric_terms(model, chamber, dmax);
      if (format == "text") {
        std::cout << hyper_text(terms);
      } else {
        Json list = Json::array();
        for (const auto& t : terms) list.push_back(to_json(t));
        emit(Json{{"d", d}, {"eps", chamber.to_string()}, {"cap", chamber.cap()},
                  {"dmax", dmax}, {"terms", list}});
      }
      return 0;
    }
    if (*jinf) {
      if (dmax < 0) throw ValidationError("dmax must be nonnegative");
      JInfinityExplicit j = j_infinity_explicit(model, SeriesConfig{d, dmax, tmin, tmax});
      Json ph = Json::array();
      for (const auto& p : j.placeholders) ph.push_back(p.to_string());
      emit(Json{{"series", to_json(j.series)}, {"placeholders", ph}});
      return 0;
    }
    if (*unstable) {
      EpsilonChamber chamber = EpsilonChamber::parse(eps_text);
      std::vector<int> l0 = parse_index_list(l0_text);
      UnstableTerm t = unstable_contribution(model, chamber, r, l0);
      Json out = to_json(t, model, r, l0);
      out["d"] = d;
      emit(out);
      return 0;
    }
    if (*decompose_cmd) {
      KElement f = kelement_from_json(read_json(in_path), d);
      validate_kelement(model, f);
      Json out = to_json(decompose(f));
      out["d"] = d;
      emit(out);
      return 0;
    }
    if (*omega_cmd) {
      KElement f = kelement_from_json(read_json(f_path), d);
      KElement g = kelement_from_json(read_json(g_path), d);
      validate_kelement(model, f);
      validate_kelement(model, g);
      emit(Json{{"d", d}, {"omega", to_json(omega(model, f, g))}});
      return 0;
    }
    if (*solve) {
      if (dmax < 0) throw ValidationError("dmax must be nonnegative");
      SolverConfig cfg = SolverConfig::defaults(SeriesConfig{d, dmax, tmin, tmax});
      if (jmax >= 0) cfg.j_max = jmax;
      cfg.n_max = nmax >= 1 ? nmax : default_nmax(d);
      KSeries baseline(cfg.series);
      if (!baseline_path.empty())
        baseline = rehome(kseries_from_json(read_json(baseline_path)), cfg.series);
      SolverState state =
          SolverState::from_chamber(model, EpsilonChamber::parse(eps_text), cfg, baseline);
      SolveResult res = solve_tail(state);
      Json out = tail_to_json(cfg, res.coefficients);
      out["eps"] = state.chamber.to_string();
      out["equations"] = res.equations;
      out["leading_checks"] = res.leading_checks;
      if (out_path.empty()) {
        emit(out);
      } else {
        std::ofstream file(out_path);
        if (!file) throw ValidationError("cannot write " + out_path);
        file << out.dump(2) << "\n";
        emit(Json{{"out", out_path}, {"coefficients", res.coefficients.size()}});
      }
      return 0;
    }
    if (*verify) {
      KSeries f = kseries_from_json(read_json(in_path));
      ConeVerification v = verify_cone_point(model, f, nmax >= 1 ? nmax : default_nmax(d));
      emit(to_json(v));
      return v.ok ? 0 : 1;
    }
  } catch (const Error& e) {
    emit(error_json(e));
    return exit_code(e);
  } catch (const std::exception& e) {
    emit(Json{{"error", {{"kind", "internal"}, {"message", e.what()}}}});
    return 5;
  }
  return 0;
}
