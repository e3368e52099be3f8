#pragma once

// Manufactured solver instances: a random baseline and a random tail T*,
// with the target set to the polar parts of the pairings of
// F* = explicit + baseline + T*, so T* is the expected solution.

#include <algorithm>

#include "kwall/wallcross.hpp"
#include "support.hpp"

namespace kwall::testing {

struct Manufactured {
  SolverState state;
  KSeries tail;
};

inline Manufactured manufacture(const FermatModel& model, const SolverConfig& cfg, Random& rng,
                                double density,
                                const EpsilonChamber& chamber = EpsilonChamber::infinity()) {
  const std::vector<int> nar = narrow_set(model).indices();
  const SeriesConfig& sc = cfg.series;
  std::vector<Var> vars = u_vars(nar);
  for (const Var& v : t_vars(nar, sc.tmin, sc.tmax)) vars.push_back(v);
  std::vector<Monomial> u_free, with_u;
  for (int deg = 2; deg <= sc.dmax; ++deg)
    for (const Monomial& m : monomials_of_degree(vars, deg))
      (m.u_degree() == 0 ? u_free : with_u).push_back(m);

  const int m_max = std::min(cfg.j_max + 1, 2);
  KSeries baseline = rng.minus_series(sc, nar, u_free, density, cfg.n_max, m_max);
  KSeries tail = rng.minus_series(sc, nar, with_u, density, cfg.n_max, cfg.j_max + 1);
  if (tail.is_zero())
    tail.add(with_u.front(), KElement(nar.front(), rng.minus_function(sc.d, 2, 1)));
  SolverState state = SolverState::from_chamber(model, chamber, cfg, baseline);
  state.target = polar_parts(model, state.assemble(tail));
  return {state, tail};
}

}  // namespace kwall::testing
