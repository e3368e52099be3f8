#include <doctest.h>

#include "kwall/json_io.hpp"
#include "support.hpp"

using namespace kwall;
using namespace kwall::testing;

namespace {
const FermatModel kQuintic(5, {1, 1, 1, 1, 1}, "quintic");
}

TEST_CASE("scalars and rational functions round-trip") {
  CHECK(rat_from_json(to_json(make_rat(-3, 7))) == make_rat(-3, 7));
  CHECK(rat_from_json(Json(4)) == 4);
  CHECK_THROWS_AS(rat_from_json(Json(0.5)), ParseError);

  Random rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const RationalFunctionQ f = rng.rational(rng.uniform(1, 6), 8, true);
    CHECK(rfq_from_json(to_json(f)) == f);
    const PolyX p = rng.poly(6);
    CHECK(poly_from_json(to_json(p)) == p);
  }
  CHECK_THROWS_AS(rfq_from_json(Json{{"d", 1}, {"num", {{"0", "1"}}}, {"den", Json::object()}}),
                  ParseError);
  CHECK_THROWS_AS(poly_from_json(Json{{"x", "1"}}), ParseError);
  CHECK_THROWS_AS(poly_from_json(Json{{"-1", "1"}}), ParseError);
}

TEST_CASE("K elements and series round-trip") {
  Random rng(6);
  const std::vector<int> nar{0, 1, 2, 3};
  const SeriesConfig cfg{5, 2, -1, 1};
  for (int trial = 0; trial < 20; ++trial) {
    const KElement f = rng.kelement(nar, 5, 10);
    CHECK(kelement_from_json(to_json(f), 5) == f);
    KSeries s(cfg);
    std::vector<Var> vars = u_vars(nar);
    for (const Var& v : t_vars(nar, -1, 1)) vars.push_back(v);
    for (const Monomial& m : monomials_of_degree(vars, 2))
      if (rng.coin(0.05)) s.add(m, rng.kelement(nar, 5, 10));
    CHECK(kseries_from_json(to_json(s)) == s);
  }
  CHECK_THROWS_AS(kelement_from_json(Json{{"0", to_json(RationalFunctionQ::one(3))}}, 5),
                  ParseError);
  Json too_high = to_json(KSeries(SeriesConfig{5, 1, -1, 1}));
  too_high["terms"]["u[0]^2"] = to_json(KElement(0, RationalFunctionQ::one(5)));
  CHECK_THROWS_AS(kseries_from_json(too_high), ParseError);
}

TEST_CASE("models") {
  const Json j = Json{{"d", 5}, {"weights", {1, 1, 1, 1, 1}}, {"name", "quintic"}};
  CHECK(model_from_json(j) == kQuintic);
  const Json rep = model_report(kQuintic);
  CHECK(rep["q"] == "1");
  CHECK(rep["nar"] == Json{0, 1, 2, 3});
  CHECK(rep["dual"]["0"] == 3);
  CHECK_THROWS_AS(model_from_json(Json{{"d", 5}}), ParseError);
  CHECK_THROWS_AS(model_from_json(Json{{"d", 5}, {"weights", {2}}}), ValidationError);
}

TEST_CASE("tail coefficients round-trip") {
  TailCoefficient t;
  t.n = 5;
  t.monomial = Monomial::parse("t[0,1]·u[2]");
  t.j = 1;
  t.s = 2;
  t.state = 1;
  t.numerator = PolyX{1, 0, -2};
  CHECK(tail_coefficient_from_json(to_json(t)) == t);

  SolverConfig cfg = SolverConfig::defaults(SeriesConfig{5, 2, -2, 2});
  const Json doc = tail_to_json(cfg, {t, t});
  CHECK(doc["j_max"] == 4);
  CHECK(doc["n_max"] == 10);
  CHECK(tail_from_json(doc) == std::vector<TailCoefficient>{t, t});

  Json wide = to_json(t);
  wide["numerator"] = to_json(PolyX::x_power(4));  // phi(5) = 4
  CHECK_THROWS_AS(tail_coefficient_from_json(wide), ParseError);
}

TEST_CASE("error documents") {
  const Json e = error_json(InsolvableError("no", "u[1]"));
  CHECK(e["error"]["kind"] == "insolvable");
  CHECK(e["error"]["monomial"] == "u[1]");
  CHECK(error_json(ValidationError("bad"))["error"]["kind"] == "validation");
}
