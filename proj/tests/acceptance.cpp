// Acceptance gate: one PASS/FAIL line per criterion. The process succeeds
// when the set of failing criteria equals the --expect-red set exactly, so a
// criterion that is known to be unattainable stays visibly red without
// breaking the suite, and any change in its status is caught.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "kwall/json_io.hpp"
#include "kwall/wallcross.hpp"

#include "dense_oracle.hpp"
#include "manufacture.hpp"
#include "support.hpp"

using namespace kwall;
using namespace kwall::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

const FermatModel kQuintic(5, {1, 1, 1, 1, 1}, "quintic");
const FermatModel kCubic(3, {1, 1, 1}, "cubic");

/// Leading-coefficient bookkeeping shared by every solver run here.
struct LeadingLedger {
  long runs = 0;
  long checks = 0;
  std::vector<std::string> violations;
} g_leading;

SolveResult tracked_solve(const SolverState& st) {
  ++g_leading.runs;
  try {
    SolveResult r = solve_tail(st);
    g_leading.checks += r.leading_checks;
    if (r.leading_checks == 0 && !r.coefficients.empty())
      g_leading.violations.push_back("run without leading checks");
    return r;
  } catch (const std::logic_error& e) {
    // The solver's leading-coefficient probe reports through logic_error.
    g_leading.violations.push_back(e.what());
    throw;
  }
}

Outcome ghost_identity() {
  for (int d = 1; d <= 24; ++d)
    if (!verify_ghost_identity(d)) return {false, "fails at d = " + std::to_string(d)};
  return {true, "d = 1..24"};
}

Outcome cyclotomic_completeness() {
  for (int n = 1; n <= 30; ++n) {
    PolyX prod(1);
    for (long m : divisors(n)) prod *= cyclotomic(static_cast<int>(m));
    if (prod != PolyX::x_power(n) - PolyX(1)) return {false, "fails at n = " + std::to_string(n)};
  }
  return {true, "n = 1..30"};
}

Outcome narrow_sets() {
  Random rng(3001);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = rng.uniform(1, 30);
    std::vector<int> divs;
    for (int e = 1; e <= d; ++e)
      if (d % e == 0) divs.push_back(e);
    std::vector<int> w;
    for (;;) {
      w.assign(rng.uniform(1, 6), 0);
      for (int& x : w) x = divs[rng.uniform(0, static_cast<int>(divs.size()) - 1)];
      int g = d;
      for (int x : w) g = std::gcd(g, x);
      if (g == 1) break;
    }
    const FermatModel m(d, w);
    std::vector<int> brute;
    for (int k = 0; k < d; ++k) {
      bool ok = true;
      for (int wj : w) ok = ok && (wj * (k + 1)) % d != 0;
      if (ok) brute.push_back(k);
    }
    const NarrowSector nar = narrow_set(m);
    if (nar.indices() != brute) return {false, "mismatch at d = " + std::to_string(d)};
    for (int k : nar)
      if (!nar.contains(((d - 2 - k) % d + d) % d)) return {false, "not closed under duality"};
  }
  return {true, "200 random models, d <= 30"};
}

Outcome broad_vanishing() {
  long broad = 0;
  for (const FermatModel* m : {&kQuintic, &kCubic})
    for (const auto& t : hypergeometric_terms(*m, EpsilonChamber(make_rat(1, 5)), 5)) {
      if (is_narrow(*m, t.state)) continue;
      ++broad;
      if (!t.coefficient.is_zero())
        return {false, m->name() + ": nonzero broad term " + t.u_monomial.to_string()};
    }
  return {broad > 0, std::to_string(broad) + " broad terms, all zero"};
}

Outcome plateau() {
  for (const FermatModel* m : {&kQuintic, &kCubic}) {
    const SeriesConfig cfg{m->d(), 4, -2, 2};
    const KSeries inf = hypergeometric_part(*m, EpsilonChamber::infinity(), cfg);
    if (hypergeometric_part(*m, EpsilonChamber(make_rat(3, 2)), cfg) != inf ||
        hypergeometric_part(*m, EpsilonChamber(Rat(100)), cfg) != inf)
      return {false, m->name() + ": plateau differs"};
    const KSeries half = hypergeometric_part(*m, EpsilonChamber(make_rat(1, 2)), cfg);
    if (half.size() <= inf.size()) return {false, m->name() + ": cap 2 adds nothing"};
    for (const auto& [mono, c] : inf)
      if (!half.get(mono) || *half.get(mono) != c)
        return {false, m->name() + ": cap 2 changes " + mono.to_string()};
  }
  return {true, "eps = 3/2, 100, inf agree; eps = 1/2 strictly contains them"};
}

Outcome quintic_golden() {
  std::ifstream in(KWALL_TEST_DATA "/quintic_cap1.json");
  if (!in) return {false, "golden file missing"};
  const Json golden = Json::parse(in);
  const auto terms = hypergeometric_terms(kQuintic, EpsilonChamber::infinity(), 1);
  bool golden_ok = terms.size() == golden["terms"].size();
  for (const Json& g : golden["terms"]) {
    const Monomial m = Monomial::parse(g["monomial"].get<std::string>());
    bool found = false;
    for (const auto& t : terms)
      if (t.u_monomial == m && t.state == g["state"].get<int>() &&
          t.coefficient == rfq_from_json(g["coefficient"]))
        found = true;
    golden_ok = golden_ok && found;
  }
  const RationalFunctionQ expected = one_minus_q(2, 5).pow(5);
  RationalFunctionQ a1;
  for (const auto& t : terms)
    if (t.multi_index == std::map<int, int>{{1, 1}}) a1 = t.coefficient;
  const bool value_ok = a1 == expected;
  std::ostringstream detail;
  detail << "golden enumeration " << (golden_ok ? "matches" : "differs") << "; a_1 = 1 coefficient is "
         << a1.to_string() << ", criterion expects " << expected.to_string()
         << " (b = 2/5 lies outside [0, 2/5))";
  return {golden_ok && value_ok, detail.str()};
}

Outcome decomposition() {
  Random rng(7007);
  const std::vector<int> nar{0, 1, 2, 3};
  for (int trial = 0; trial < 500; ++trial) {
    const KElement f = rng.kelement(nar, 5, 12);
    const KDecomposition dec = decompose(f);
    if (dec.plus + dec.minus != f) return {false, "plus + minus != input"};
    for (const auto& [k, p] : dec.plus)
      if (!p.is_laurent()) return {false, "plus not Laurent"};
    for (const auto& [k, m] : dec.minus) {
      if (m.denominator().coeff(0) == 0) return {false, "minus singular at q = 0"};
      if (m.numerator().degree() >= m.denominator().degree())
        return {false, "minus does not vanish at infinity"};
    }
    const KDecomposition pp = decompose(dec.plus), mm = decompose(dec.minus);
    if (pp.plus != dec.plus || !pp.minus.is_zero() || !mm.plus.is_zero() || mm.minus != dec.minus)
      return {false, "projections not idempotent"};
  }
  return {true, "500 random elements"};
}

Outcome omega_properties() {
  Random rng(8008);
  const std::vector<int> nar{0, 1, 2, 3};
  for (int trial = 0; trial < 200; ++trial) {
    const KElement f = rng.kelement(nar, 5, 12), g = rng.kelement(nar, 5, 12),
                   h = rng.kelement(nar, 5, 12);
    const Rat a = rng.small_rat();
    const Rat fg = omega(kQuintic, f, g);
    if (fg != oracle_omega(kQuintic, f, g)) return {false, "disagrees with the residue oracle"};
    if (fg != -omega(kQuintic, g, f)) return {false, "not antisymmetric"};
    if (omega(kQuintic, f + h.scaled(a), g) != fg + a * omega(kQuintic, h, g) ||
        omega(kQuintic, f, g + h.scaled(a)) != fg + a * omega(kQuintic, f, h))
      return {false, "not bilinear"};
  }
  return {true, "200 random pairs"};
}

Outcome solver_vs_dense() {
  const auto start = std::chrono::steady_clock::now();
  Random rng(9009);
  int instances = 0;
  std::size_t max_unknowns = 0;
  for (const FermatModel* m : {&kQuintic, &kCubic}) {
    const SolverConfig cfg = SolverConfig::defaults(SeriesConfig{m->d(), 2, -2, 2});
    std::vector<SolverState> states;
    for (const char* eps : {"inf", "1/2"})
      states.push_back(SolverState::from_chamber(*m, EpsilonChamber::parse(eps), cfg,
                                                 KSeries(cfg.series)));
    for (int i = 0; i < 2; ++i) states.push_back(manufacture(*m, cfg, rng, 0.03).state);
    for (const SolverState& st : states) {
      const DenseOutcome dense = dense_solve(st);
      max_unknowns = std::max(max_unknowns, dense.unknowns);
      if (dense.status != DenseOutcome::Status::Solved)
        return {false, m->name() + ": dense solve not uniquely solvable"};
      if (tracked_solve(st).tail != dense.tail) return {false, m->name() + ": tails differ"};
      ++instances;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream detail;
  detail << instances << " instances, up to " << max_unknowns << " dense unknowns, " << secs << " s";
  return {secs <= 300, detail.str()};
}

Outcome round_trips() {
  Random rng(1010);
  int done = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const FermatModel& m = trial % 2 ? kCubic : kQuintic;
    SolverConfig cfg = SolverConfig::defaults(SeriesConfig{m.d(), 2, -2, 2});
    cfg.j_max = 3;
    cfg.n_max = 10;
    const Manufactured mf = manufacture(m, cfg, rng, 0.05);
    if (tracked_solve(mf.state).tail != mf.tail)
      return {false, "trial " + std::to_string(trial) + " not recovered"};
    ++done;
  }
  return {true, std::to_string(done) + " manufactured tails recovered"};
}

Outcome leading_law() {
  if (!g_leading.violations.empty()) return {false, g_leading.violations.front()};
  std::ostringstream detail;
  detail << g_leading.checks << " probed equations over " << g_leading.runs << " solver runs";
  return {g_leading.runs > 0 && g_leading.checks > 0, detail.str()};
}

Outcome cone_at_one() {
  const KSeries j = j_infinity_explicit(kQuintic, SeriesConfig{5, 1, -2, 2}).series;
  const ConeVerification v = verify_cone_point(kQuintic, j, 10);
  return {v.ok, v.ok ? "quintic explicit series verifies" : to_json(v).dump()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expect_red;
  app.add_option("--expect-red", expect_red, "criteria known to be unattainable")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  // Criterion 11 reads the ledger filled by 9 and 10, so order matters.
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, ghost_identity},   {2, cyclotomic_completeness}, {3, narrow_sets},
      {4, broad_vanishing},  {5, plateau},                 {6, quintic_golden},
      {7, decomposition},    {8, omega_properties},        {9, solver_vs_dense},
      {10, round_trips},     {11, leading_law},            {12, cone_at_one}};

  std::set<int> red;
  for (const auto& [id, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) red.insert(id);
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail
              << std::endl;
  }
  const std::set<int> expected(expect_red.begin(), expect_red.end());
  if (red != expected) {
    std::cout << "failing set differs from --expect-red" << std::endl;
    return 1;
  }
  return 0;
}
