#include "kwall/json_io.hpp"

namespace kwall {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

int parse_int_key(const std::string& key) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size()) throw ParseError("expected an integer key, got '" + key + "'");
  return v;
}

SeriesConfig series_config_from_json(const Json& j) {
  return SeriesConfig{int_field(j, "d"), int_field(j, "dmax"), int_field(j, "tmin"),
                      int_field(j, "tmax")};
}

Json series_config_json(const SeriesConfig& cfg) {
  return Json{{"d", cfg.d}, {"dmax", cfg.dmax}, {"tmin", cfg.tmin}, {"tmax", cfg.tmax}};
}

Json rat_list(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const Rat& x : v) out.push_back(to_json(x));
  return out;
}

}  // namespace

Json to_json(const Rat& x) { return to_string(x); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw ParseError("rationals are written as strings \"p/q\"");
}

Json to_json(const PolyX& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = to_json(c);
  return out;
}

PolyX poly_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("polynomials are objects {\"exponent\": \"coefficient\"}");
  std::map<int, Rat> terms;
  for (const auto& [k, v] : j.items()) {
    int e = parse_int_key(k);
    if (e < 0) throw ParseError("polynomial exponents must be nonnegative");
    terms[e] += rat_from_json(v);
  }
  return PolyX::from_map(terms);
}

Json to_json(const RationalFunctionQ& f) {
  return Json{{"d", f.d()}, {"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}};
}

RationalFunctionQ rfq_from_json(const Json& j) {
  const int d = int_field(j, "d");
  if (d < 1) throw ParseError("d must be positive");
  PolyX den = j.contains("den") ? poly_from_json(j.at("den")) : PolyX(Rat(1));
  if (den.is_zero()) throw ParseError("zero denominator");
  return RationalFunctionQ(poly_from_json(field(j, "num")), den, d);
}

Json to_json(const KElement& f) {
  Json out = Json::object();
  for (const auto& [k, v] : f) out[std::to_string(k)] = to_json(v);
  return out;
}

KElement kelement_from_json(const Json& j, int d) {
  if (!j.is_object()) throw ParseError("K elements are objects {\"k\": function}");
  KElement out;
  for (const auto& [k, v] : j.items()) {
    RationalFunctionQ f = rfq_from_json(v);
    if (f.d() != d)
      throw ParseError("component " + k + " has d = " + std::to_string(f.d()) +
                       ", expected " + std::to_string(d));
    out.add(parse_int_key(k), f);
  }
  return out;
}

Json to_json(const KDecomposition& dec) {
  return Json{{"plus", to_json(dec.plus)}, {"minus", to_json(dec.minus)}};
}

Json to_json(const KSeries& s) {
  Json out = series_config_json(s.config());
  Json terms = Json::object();
  for (const auto& [m, c] : s) terms[m.to_string()] = to_json(c);
  out["terms"] = std::move(terms);
  return out;
}

KSeries kseries_from_json(const Json& j) {
  const SeriesConfig cfg = series_config_from_json(j);
  KSeries out(cfg);
  const Json& terms = field(j, "terms");
  if (!terms.is_object()) throw ParseError("'terms' must be an object");
  for (const auto& [m, c] : terms.items()) {
    Monomial mono = Monomial::parse(m);
    if (mono.degree() > cfg.dmax)
      throw ParseError("monomial " + m + " exceeds dmax = " + std::to_string(cfg.dmax));
    out.add(mono, kelement_from_json(c, cfg.d));
  }
  return out;
}

Json to_json(const ScalarSeries& s) {
  Json out = series_config_json(s.config());
  Json terms = Json::object();
  for (const auto& [m, c] : s) terms[m.to_string()] = to_json(c);
  out["terms"] = std::move(terms);
  return out;
}

FermatModel model_from_json(const Json& j) {
  const Json& w = field(j, "weights");
  if (!w.is_array()) throw ParseError("'weights' must be an array");
  std::vector<int> weights;
  for (const Json& x : w) {
    if (!x.is_number_integer()) throw ParseError("weights must be integers");
    weights.push_back(x.get<int>());
  }
  std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
  return FermatModel(int_field(j, "d"), std::move(weights), std::move(name));
}

Json model_report(const FermatModel& model) {
  Json charges = Json::array();
  for (int j = 0; j < model.size(); ++j) charges.push_back(to_json(model.charge(j)));
  const NarrowSector nar = narrow_set(model);
  Json dual = Json::object();
  for (int k : nar) dual[std::to_string(k)] = dual_index(model, k);
  return Json{{"d", model.d()},
              {"weights", model.weights()},
              {"name", model.name()},
              {"charges", charges},
              {"q", to_json(model.total_charge())},
              {"nar", nar.indices()},
              {"dual", dual}};
}

Json to_json(const HypergeometricTerm& t) {
  Json idx = Json::object();
  for (const auto& [i, a] : t.multi_index) idx[std::to_string(i)] = a;
  Json b = Json::array();
  for (const auto& list : t.b_lists) b.push_back(rat_list(list));
  return Json{{"multi_index", idx},          {"state", t.state},
              {"monomial", t.u_monomial.to_string()}, {"b_lists", b},
              {"coefficient", to_json(t.coefficient)}, {"vanishes", t.coefficient.is_zero()}};
}

Json to_json(const UnstableTerm& t, const FermatModel& model, int r,
             const std::vector<int>& l0) {
  Json b = Json::array();
  Json ranks = Json::array();
  for (std::size_t j = 0; j < t.b_lists.size(); ++j) {
    b.push_back(rat_list(t.b_lists[j]));
    ranks.push_back(cech_rank(model, static_cast<int>(j), r, l0));
  }
  return Json{{"r", r},
              {"l0", l0},
              {"state", t.state},
              {"monomial", t.u_monomial.to_string()},
              {"b_lists", b},
              {"cech_ranks", ranks},
              {"coefficient", to_json(t.coefficient)}};
}

Json to_json(const TailCoefficient& t) {
  return Json{{"n", t.n},       {"monomial", t.monomial.to_string()},
              {"j", t.j},       {"s", t.s},
              {"state", t.state}, {"numerator", to_json(t.numerator)}};
}

TailCoefficient tail_coefficient_from_json(const Json& j) {
  TailCoefficient t;
  t.n = int_field(j, "n");
  const Json& m = field(j, "monomial");
  if (!m.is_string()) throw ParseError("'monomial' must be a string");
  t.monomial = Monomial::parse(m.get<std::string>());
  t.j = int_field(j, "j");
  t.s = int_field(j, "s");
  t.state = int_field(j, "state");
  t.numerator = poly_from_json(field(j, "numerator"));
  if (t.n < 1 || t.j < 0) throw ParseError("tail coefficient needs n >= 1 and j >= 0");
  if (t.numerator.degree() >= euler_phi(t.n))
    throw ParseError("tail numerator degree must stay below phi(n)");
  return t;
}

Json tail_to_json(const SolverConfig& cfg, const std::vector<TailCoefficient>& c) {
  Json out = series_config_json(cfg.series);
  out["j_max"] = cfg.j_max;
  out["n_max"] = cfg.n_max;
  Json list = Json::array();
  for (const TailCoefficient& t : c) list.push_back(to_json(t));
  out["coefficients"] = std::move(list);
  return out;
}

std::vector<TailCoefficient> tail_from_json(const Json& j) {
  const Json& list = field(j, "coefficients");
  if (!list.is_array()) throw ParseError("'coefficients' must be an array");
  std::vector<TailCoefficient> out;
  for (const Json& x : list) out.push_back(tail_coefficient_from_json(x));
  return out;
}

Json to_json(const NoPoleReport& r) {
  auto entries = [](const std::vector<NoPoleReport::Entry>& v) {
    Json out = Json::array();
    for (const auto& e : v)
      out.push_back(Json{{"monomial", e.monomial.to_string()}, {"n", e.n}, {"order", e.order}});
    return out;
  };
  Json malformed = Json::array();
  for (const Monomial& m : r.malformed) malformed.push_back(m.to_string());
  return Json{{"clean", r.clean()},
              {"violations", entries(r.violations)},
              {"overflows", entries(r.overflows)},
              {"malformed", malformed}};
}

Json to_json(const ConeShapeReport& r) {
  return Json{{"ok", r.ok},
              {"diagnostics", r.diagnostics},
              {"t_hat_minus_t", to_json(r.t_hat_minus_t)},
              {"tail", to_json(r.tail)}};
}

Json to_json(const ConeVerification& v) {
  Json poles = Json::object();
  for (const auto& [rs, rep] : v.pole_reports)
    poles[std::to_string(rs.first) + "," + std::to_string(rs.second)] = to_json(rep);
  return Json{{"ok", v.ok}, {"shape", to_json(v.shape)}, {"pole_reports", poles}};
}

Json error_json(const Error& e) {
  Json err{{"kind", e.kind()}, {"message", e.what()}};
  if (const auto* x = dynamic_cast<const InsolvableError*>(&e)) err["monomial"] = x->monomial();
  if (const auto* x = dynamic_cast<const TruncationOverflow*>(&e)) err["monomial"] = x->monomial();
  return Json{{"error", err}};
}

}  // namespace kwall
