#pragma once

// Pole analysis of the paired derivative series
//   P_{r,s} = ( d/du^r F(t,u,q), d/dt_0^s F(t,u,1/q) )
// and the graded solver that fixes the K- tail of F by requiring every P_{r,s}
// to be free of poles at roots of unity.
//
// F is assembled as (1 - q) phi_0 + t(1/q) + f + baseline + tail where f holds
// Laurent terms of positive u-degree, the baseline is the u-free K- part and
// the tail (positive u-degree, total degree >= 2) is the unknown.

#include <map>
#include <string>
#include <vector>

#include "kwall/cone.hpp"
#include "kwall/ifunction.hpp"

namespace kwall {

struct SolverConfig {
  SeriesConfig series;
  int j_max = 0;  // pole orders up to j_max + 1 in each block
  int n_max = 0;  // x-level cyclotomic orders up to n_max
  /// Re-derive the leading coefficient of every extracted equation by probing.
  bool check_leading = true;

  /// j_max = dmax + 2, n_max = 2d.
  static SolverConfig defaults(const SeriesConfig& series);
};

struct EquationKey {
  int r = 0;
  int s = 0;
  Monomial v;
  friend auto operator<=>(const EquationKey&, const EquationKey&) = default;
  friend bool operator==(const EquationKey&, const EquationKey&) = default;
};
/// Prescribed polar parts of P_{r,s} at v; missing entries mean zero.
using TargetMap = std::map<EquationKey, RationalFunctionQ>;

struct SolverState {
  FermatModel model;
  EpsilonChamber chamber = EpsilonChamber::infinity();
  SolverConfig config;
  KSeries f;
  KSeries baseline;
  TargetMap target;

  /// f from the Laurent parts of the hypergeometric terms of positive
  /// u-degree; the K- parts of those terms are left for the solver.
  static SolverState from_chamber(const FermatModel& model, const EpsilonChamber& chamber,
                                  const SolverConfig& config, KSeries baseline);

  /// Throws ValidationError when f, the baseline or the config are out of shape.
  void validate() const;
  KSeries assemble(const KSeries& tail) const;
};

/// One Phi_n-adic digit of a tail component: numerator / Phi_n(x)^{j+1} at
/// `monomial`, in component `state` = d - 2 - s.
struct TailCoefficient {
  int n = 0;
  Monomial monomial;
  int j = 0;
  int s = 0;
  int state = 0;
  PolyX numerator;
  friend bool operator==(const TailCoefficient&, const TailCoefficient&) = default;
};

std::vector<TailCoefficient> tail_coefficients(const FermatModel& model, const KSeries& tail);
KSeries tail_from_coefficients(const SeriesConfig& cfg, const std::vector<TailCoefficient>& c);

struct SolveResult {
  KSeries tail;
  std::vector<TailCoefficient> coefficients;
  long equations = 0;
  long leading_checks = 0;
};

/// Throws InsolvableError, TruncationOverflow or MalformedPoleError.
SolveResult solve_tail(const SolverState& state);

ScalarSeries pairing_series(const FermatModel& model, const KSeries& f, int r, int s);

struct NoPoleReport {
  struct Entry {
    Monomial monomial;
    int n = 0;
    int order = 0;
  };
  std::vector<Entry> violations;
  std::vector<Entry> overflows;     // blocks beyond n_max
  std::vector<Monomial> malformed;  // poles outside the cyclotomic dictionary
  bool clean() const { return violations.empty() && overflows.empty() && malformed.empty(); }
};
NoPoleReport check_no_pole(const ScalarSeries& p, int n_max);

struct ConeVerification {
  bool ok = true;
  ConeShapeReport shape;
  std::map<std::pair<int, int>, NoPoleReport> pole_reports;  // keyed by (r, s), failures only
};
ConeVerification verify_cone_point(const FermatModel& model, const KSeries& f, int n_max);

/// Principal parts at roots of unity (the K- projection) of every P_{r,s}
/// coefficient of F, keyed like TargetMap.
TargetMap polar_parts(const FermatModel& model, const KSeries& f);

}  // namespace kwall
