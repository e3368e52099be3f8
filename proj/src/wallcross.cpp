#include "kwall/wallcross.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

namespace kwall {

SolverConfig SolverConfig::defaults(const SeriesConfig& series) {
  return SolverConfig{series, series.dmax + 2, 2 * series.d, true};
}

SolverState SolverState::from_chamber(const FermatModel& model, const EpsilonChamber& chamber,
                                      const SolverConfig& config, KSeries baseline) {
  KSeries f(config.series);
  for (const auto& [m, c] : hypergeometric_part(model, chamber, config.series))
    if (m.u_degree() > 0) f.add(m, decompose(c).plus);
  return SolverState{model, chamber, config, std::move(f), std::move(baseline), {}};
}

void SolverState::validate() const {
  const SeriesConfig& cfg = config.series;
  if (cfg.d != model.d()) throw ValidationError("series d does not match the model");
  if (cfg.dmax < 0) throw ValidationError("dmax must be nonnegative");
  if (config.j_max < 0 || config.n_max < 1)
    throw ValidationError("need j_max >= 0 and n_max >= 1");
  if (!(f.config() == cfg) || !(baseline.config() == cfg))
    throw ValidationError("f and the baseline must share the solver's series configuration");
  for (const auto& [m, c] : f) {
    validate_kelement(model, c);
    if (m.u_degree() == 0) throw ValidationError("f has a u-free term at " + m.to_string());
    for (const auto& [k, v] : c)
      if (!v.is_laurent())
        throw ValidationError("f is not a Laurent polynomial at " + m.to_string());
  }
  for (const auto& [m, c] : baseline) {
    validate_kelement(model, c);
    if (m.u_degree() != 0) throw ValidationError("baseline depends on u at " + m.to_string());
    if (m.degree() < 2) throw ValidationError("baseline term below degree 2 at " + m.to_string());
    if (!decompose(c).plus.is_zero())
      throw ValidationError("baseline term outside K- at " + m.to_string());
  }
  for (const auto& [key, value] : target) {
    if (!is_narrow(model, key.r) || !is_narrow(model, key.s))
      throw ValidationError("target equation with non-narrow index");
    if (!split_scalar(value).plus.is_zero())
      throw ValidationError("target at " + key.v.to_string() + " is not a polar part");
  }
}

KSeries SolverState::assemble(const KSeries& tail) const {
  return dilaton_series(config.series) + input_series(model, config.series) + f + baseline +
         tail;
}

std::vector<TailCoefficient> tail_coefficients(const FermatModel& model, const KSeries& tail) {
  std::vector<TailCoefficient> out;
  for (const auto& [m, c] : tail)
    for (const auto& [k, v] : c)
      for (const BlockPart& b : partial_fraction_blocks(v)) {
        std::vector<PolyX> digits = block_digits(b.n, b.multiplicity, b.numerator);
        for (int j = 0; j < b.multiplicity; ++j)
          if (!digits[j].is_zero())
            out.push_back({b.n, m, j, dual_index(model, k), k, digits[j]});
      }
  return out;
}

KSeries tail_from_coefficients(const SeriesConfig& cfg, const std::vector<TailCoefficient>& c) {
  KSeries out(cfg);
  for (const TailCoefficient& t : c)
    out.add(t.monomial,
            KElement(t.state, RationalFunctionQ::block_term(t.numerator, t.n, t.j + 1, cfg.d)));
  return out;
}

namespace {

/// Coefficients of P_{r,s} at a single monomial, read off a mutable F.
class PairingEvaluator {
 public:
  PairingEvaluator(const FermatModel& model, KSeries& f) : model_(model), f_(f) {}

  RationalFunctionQ coefficient(int r, int s, const Monomial& v) {
    const Var ur = Var::u(r), ts = Var::t(s, 0);
    RationalFunctionQ acc = RationalFunctionQ::zero(model_.d());
    for (const Monomial& v1 : v.divisors()) {
      const Monomial m1 = v1 * Monomial::of(ur);
      const KElement* c1 = f_.get(m1);
      if (!c1) continue;
      const Monomial m2 = v.quotient(v1) * Monomial::of(ts);
      const KElement* c2 = inverted(m2);
      if (!c2) continue;
      RationalFunctionQ p = pair_vectors(model_, *c1, *c2, RationalFunctionQ::zero(model_.d()));
      acc += p * Rat(m1.exponent(ur) * m2.exponent(ts));
    }
    return acc;
  }

  void add(const Monomial& m, int k, const RationalFunctionQ& value) {
    f_.add(m, KElement(k, value));
    inverted_.erase(m);
  }

 private:
  const KElement* inverted(const Monomial& m) {
    auto it = inverted_.find(m);
    if (it == inverted_.end()) {
      const KElement* c = f_.get(m);
      it = inverted_.emplace(m, c ? invert_q(*c) : KElement()).first;
    }
    return it->second.is_zero() ? nullptr : &it->second;
  }

  const FermatModel& model_;
  KSeries& f_;
  std::map<Monomial, KElement> inverted_;
};

/// Monomials of positive u-degree and total degree in [2, dmax], in graded order.
std::vector<Monomial> unknown_monomials(const FermatModel& model, const SeriesConfig& cfg) {
  std::vector<Var> vars;
  for (int k : narrow_set(model)) {
    vars.push_back(Var::u(k));
    for (int j = cfg.tmin; j <= cfg.tmax; ++j) vars.push_back(Var::t(k, j));
  }
  std::vector<Monomial> out;
  std::vector<std::pair<Var, int>> stack;
  std::function<void(std::size_t, int)> grow = [&](std::size_t from, int left) {
    Monomial m(stack);
    if (m.degree() >= 2 && m.u_degree() > 0) out.push_back(m);
    if (left == 0) return;
    for (std::size_t i = from; i < vars.size(); ++i) {
      stack.emplace_back(vars[i], 1);
      grow(i, left - 1);
      stack.pop_back();
    }
  };
  grow(0, cfg.dmax);
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

RationalFunctionQ polar_part(const RationalFunctionQ& p, const Monomial& where) {
  try {
    return split_scalar(p).minus;
  } catch (const MalformedPoleError& e) {
    throw MalformedPoleError(where.to_string() + ": " + e.what());
  }
}

void check_block_bounds(const RationalFunctionQ& x, const SolverConfig& cfg,
                        const Monomial& where) {
  for (const auto& [n, m] : x.blocks()) {
    if (n > cfg.n_max)
      throw TruncationOverflow("tail needs the cyclotomic block Phi_" + std::to_string(n) +
                                   " beyond n_max = " + std::to_string(cfg.n_max),
                               where.to_string());
    if (m > cfg.j_max + 1)
      throw TruncationOverflow("tail needs pole order " + std::to_string(m) +
                                   " beyond j_max + 1 = " + std::to_string(cfg.j_max + 1),
                               where.to_string());
  }
}

}  // namespace

SolveResult solve_tail(const SolverState& state) {
  state.validate();
  const FermatModel& model = state.model;
  const SolverConfig& cfg = state.config;
  const int d = model.d();
  const NarrowSector nar = narrow_set(model);

  KSeries f = state.assemble(KSeries(cfg.series));
  PairingEvaluator eval(model, f);
  SolveResult result;
  result.tail = KSeries(cfg.series);

  auto target = [&state, d](int r, int s, const Monomial& v) {
    auto it = state.target.find(EquationKey{r, s, v});
    return it == state.target.end() ? RationalFunctionQ::zero(d) : it->second;
  };

  // Equations at v = 1 involve no unknowns.
  if (cfg.series.dmax >= 1)
    for (int r : nar)
      for (int s : nar) {
        ++result.equations;
        if (!(polar_part(eval.coefficient(r, s, Monomial()), Monomial()) == target(r, s, Monomial())))
          throw InsolvableError("P_{" + std::to_string(r) + "," + std::to_string(s) +
                                    "} has a pole at a root of unity already at u = t = 0",
                                "1");
      }

  const RationalFunctionQ probe = RationalFunctionQ::block_term(PolyX(Rat(1)), 1, 1, d);
  for (const Monomial& m : unknown_monomials(model, cfg.series)) {
    for (int k : nar) {
      const int s = dual_index(model, k);
      std::optional<RationalFunctionQ> value;
      for (const auto& [var, e] : m.factors()) {
        if (!var.is_u()) continue;
        const int r = var.k;
        const Monomial v = m.without(var);
        ++result.equations;
        const RationalFunctionQ p0 = eval.coefficient(r, s, v);
        if (cfg.check_leading) {
          eval.add(m, k, probe);
          const RationalFunctionQ p1 = eval.coefficient(r, s, v);
          eval.add(m, k, -probe);
          if (!(p1 - p0 == probe * Rat(e)))
            throw std::logic_error("leading coefficient at " + m.to_string() +
                                   " differs from the u-exponent + 1");
          ++result.leading_checks;
        }
        RationalFunctionQ x = (target(r, s, v) - polar_part(p0, m)) * make_rat(1, e);
        if (!value) {
          value = std::move(x);
        } else if (!(*value == x)) {
          throw InsolvableError("equations for component " + std::to_string(k) + " at " +
                                    m.to_string() + " disagree between u-derivatives",
                                m.to_string());
        }
      }
      if (!value || value->is_zero()) continue;
      check_block_bounds(*value, cfg, m);
      eval.add(m, k, *value);
      result.tail.add(m, KElement(k, *value));
    }
  }
  result.coefficients = tail_coefficients(model, result.tail);
  return result;
}

ScalarSeries pairing_series(const FermatModel& model, const KSeries& f, int r, int s) {
  return pair_series(model, differentiate(f, Var::u(r)),
                     substitute_invert_q(differentiate(f, Var::t(s, 0))));
}

NoPoleReport check_no_pole(const ScalarSeries& p, int n_max) {
  NoPoleReport report;
  for (const auto& [m, c] : p) {
    if (c.remainder().degree() > 0) report.malformed.push_back(m);
    for (const auto& [n, order] : c.blocks())
      (n > n_max ? report.overflows : report.violations).push_back({m, n, order});
  }
  return report;
}

ConeVerification verify_cone_point(const FermatModel& model, const KSeries& f, int n_max) {
  ConeVerification out;
  out.shape = is_cone_shape(model, f);
  out.ok = out.shape.ok;
  if (!out.shape.diagnostics.empty() && f.config().d != model.d()) return out;
  for (int r : narrow_set(model))
    for (int s : narrow_set(model)) {
      NoPoleReport rep = check_no_pole(pairing_series(model, f, r, s), n_max);
      if (rep.clean()) continue;
      out.ok = false;
      out.pole_reports.emplace(std::make_pair(r, s), std::move(rep));
    }
  return out;
}

TargetMap polar_parts(const FermatModel& model, const KSeries& f) {
  TargetMap out;
  for (int r : narrow_set(model))
    for (int s : narrow_set(model))
      for (const auto& [v, c] : pairing_series(model, f, r, s)) {
        RationalFunctionQ minus = split_scalar(c).minus;
        if (!minus.is_zero()) out.emplace(EquationKey{r, s, v}, std::move(minus));
      }
  return out;
}

}  // namespace kwall
