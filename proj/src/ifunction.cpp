#include "kwall/ifunction.hpp"

#include <functional>

namespace kwall {

EpsilonChamber::EpsilonChamber(const Rat& epsilon) : eps_(epsilon) {
  if (epsilon <= 0) throw ValidationError("epsilon must be positive, got " + kwall::to_string(epsilon));
}

EpsilonChamber EpsilonChamber::parse(const std::string& text) {
  if (text == "inf" || text == "infinity") return infinity();
  return EpsilonChamber(parse_rat(text));
}

const Rat& EpsilonChamber::epsilon() const {
  if (!eps_) throw ValidationError("the epsilon = infinity chamber has no finite epsilon");
  return *eps_;
}

int EpsilonChamber::cap() const {
  if (!eps_ || *eps_ > 1) return 1;
  return static_cast<int>(to_long(ceil_rat(Rat(1 / *eps_))));
}

std::string EpsilonChamber::to_string() const {
  return eps_ ? kwall::to_string(*eps_) : "inf";
}

int ceil_inv(const EpsilonChamber& chamber) { return chamber.cap(); }

int HypergeometricTerm::size() const {
  int n = 0;
  for (const auto& [i, a] : multi_index) n += a;
  return n;
}

namespace {

RationalFunctionQ one_minus_q(int d) {
  return RationalFunctionQ::laurent({{0, Rat(1)}, {d, Rat(-1)}}, d);
}

/// {tau + n : n >= 0} intersected with [0, upper) or (0, upper).
std::vector<Rat> progression(const Rat& tau, const Rat& upper, bool strict) {
  std::vector<Rat> out;
  for (Rat b = tau; b < upper; b += 1)
    if (!strict || b > 0) out.push_back(b);
  return out;
}

RationalFunctionQ b_product(const std::vector<std::vector<Rat>>& lists, int d) {
  std::vector<QExp> chars;
  for (const auto& list : lists)
    for (const Rat& b : list) chars.push_back(QExp::from_rat(Rat(-b), d));
  return euler_class(chars, d);
}

std::vector<Rat> unstable_b_list(const FermatModel& model, int j, int r,
                                 const std::vector<int>& l0) {
  const Rat qj = model.charge(j);
  Rat upper = qj + frac(Rat(qj * r));
  Rat shifted = qj + qj * r;
  for (int l : l0) {
    upper += frac(Rat(qj * l));
    shifted += qj * l;
  }
  return progression(frac(shifted), upper, true);
}

void enumerate(const std::vector<int>& nar, std::size_t pos, int budget, std::map<int, int>& a,
               const std::function<void(const std::map<int, int>&)>& emit) {
  if (pos == nar.size()) {
    emit(a);
    return;
  }
  for (int v = 0; v <= budget; ++v) {
    if (v > 0)
      a[nar[pos]] = v;
    else
      a.erase(nar[pos]);
    enumerate(nar, pos + 1, budget - v, a, emit);
  }
  a.erase(nar[pos]);
}

}  // namespace

std::vector<HypergeometricTerm> hypergeometric_terms(const FermatModel& model,
                                                     const EpsilonChamber& chamber, int dmax) {
  const int d = model.d();
  const int budget = std::max(0, std::min(chamber.cap(), dmax));
  const NarrowSector nar = narrow_set(model);
  std::vector<HypergeometricTerm> out;
  std::map<int, int> a;
  enumerate(nar.indices(), 0, budget, a, [&](const std::map<int, int>& idx) {
    HypergeometricTerm t;
    t.multi_index = idx;
    int state = 0;
    std::vector<std::pair<Var, int>> u;
    for (const auto& [i, ai] : idx) {
      for (int c = 0; c < ai; ++c) state = mult_index(model, state, i);
      u.emplace_back(Var::u(i), ai);
    }
    t.state = state;
    t.u_monomial = Monomial(std::move(u));
    for (int j = 0; j < model.size(); ++j) {
      const Rat qj = model.charge(j);
      Rat upper = qj, shifted = qj;
      for (const auto& [i, ai] : idx) {
        upper += ai * frac(Rat(i * qj));
        shifted += ai * i * qj;
      }
      t.b_lists.push_back(progression(frac(shifted), upper, false));
    }
    t.coefficient = one_minus_q(d).pow(1 - t.size()) * b_product(t.b_lists, d);
    out.push_back(std::move(t));
  });
  return out;
}

KSeries hypergeometric_part(const FermatModel& model, const EpsilonChamber& chamber,
                            const SeriesConfig& cfg) {
  KSeries out(cfg);
  for (const HypergeometricTerm& t : hypergeometric_terms(model, chamber, cfg.dmax))
    out.add(t.u_monomial, KElement(t.state, t.coefficient));
  return out;
}

JInfinityExplicit j_infinity_explicit(const FermatModel& model, const SeriesConfig& cfg) {
  JInfinityExplicit out;
  out.series = hypergeometric_part(model, EpsilonChamber::infinity(), cfg) +
               input_series(model, cfg);
  for (int k : narrow_set(model))
    out.placeholders.push_back(
        CorrelatorSymbol{{{k, 0}}, {}, "inf"});
  return out;
}

UnstableTerm unstable_contribution(const FermatModel& model, const EpsilonChamber& chamber,
                                   int r, const std::vector<int>& l0) {
  if (chamber.is_infinite())
    throw ValidationError("unstable loci need a finite epsilon");
  const int n0 = static_cast<int>(l0.size());
  if (Rat(n0 + 1) > 1 / chamber.epsilon())
    throw ValidationError("unstable locus absent: n0 + 1 = " + std::to_string(n0 + 1) +
                          " exceeds 1/epsilon = " + to_string(Rat(1 / chamber.epsilon())));
  if (!is_narrow(model, r)) throw ValidationError("r = " + std::to_string(r) + " is not narrow");
  for (int l : l0)
    if (!is_narrow(model, l))
      throw ValidationError("light index " + std::to_string(l) + " is not narrow");

  const int d = model.d();
  UnstableTerm out;
  out.state = r;
  std::vector<std::pair<Var, int>> u;
  for (int l : l0) {
    out.state = mult_index(model, out.state, l);
    u.emplace_back(Var::u(l), 1);
  }
  out.u_monomial = Monomial(std::move(u));
  for (int j = 0; j < model.size(); ++j) out.b_lists.push_back(unstable_b_list(model, j, r, l0));
  out.coefficient = b_product(out.b_lists, d) * one_minus_q(d).pow(-n0);
  return out;
}

int cech_rank(const FermatModel& model, int j, int r, const std::vector<int>& l0) {
  if (j < 0 || j >= model.size()) throw ValidationError("coordinate index out of range");
  return static_cast<int>(unstable_b_list(model, j, r, l0).size());
}

}  // namespace kwall
