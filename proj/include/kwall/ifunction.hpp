#pragma once

// Closed-form pieces of the epsilon-chamber J-functions: the hypergeometric
// part, the epsilon = infinity explicit series, unstable-locus factors and
// the matching Cech counts.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kwall/series.hpp"

namespace kwall {

class EpsilonChamber {
 public:
  static EpsilonChamber infinity() { return EpsilonChamber(); }
  /// Rejects epsilon <= 0.
  explicit EpsilonChamber(const Rat& epsilon);
  /// "P/Q", an integer, or "inf".
  static EpsilonChamber parse(const std::string& text);

  bool is_infinite() const { return !eps_.has_value(); }
  const Rat& epsilon() const;
  /// ceil(1/epsilon), and 1 for epsilon > 1 or infinity.
  int cap() const;
  std::string to_string() const;

 private:
  EpsilonChamber() = default;
  std::optional<Rat> eps_;
};

int ceil_inv(const EpsilonChamber& chamber);

struct HypergeometricTerm {
  std::map<int, int> multi_index;       // narrow i -> a_i > 0
  int state = 0;                        // K = sum i a_i mod d
  std::vector<std::vector<Rat>> b_lists;  // per coordinate j
  RationalFunctionQ coefficient;        // (1-q)^{1-|a|} prod_j prod_b (1 - q^b)
  Monomial u_monomial;

  int size() const;
};

/// All multi-indices with |a| <= min(cap, dmax), in lexicographic order of
/// (a_{i_1}, a_{i_2}, ...) over the narrow indices.
std::vector<HypergeometricTerm> hypergeometric_terms(const FermatModel& model,
                                                     const EpsilonChamber& chamber, int dmax);

/// The terms above summed into a series; broad terms vanish on their own.
KSeries hypergeometric_part(const FermatModel& model, const EpsilonChamber& chamber,
                            const SeriesConfig& cfg);

struct JInfinityExplicit {
  KSeries series;  // hypergeometric part at cap 1 plus t(1/q)
  std::vector<CorrelatorSymbol> placeholders;
};
JInfinityExplicit j_infinity_explicit(const FermatModel& model, const SeriesConfig& cfg);

struct UnstableTerm {
  int state = 0;
  RationalFunctionQ coefficient;  // prod_j prod_{0<b} (1 - q^b) / (1-q)^{n0}
  Monomial u_monomial;
  std::vector<std::vector<Rat>> b_lists;
};

/// Requires a finite chamber with |l0| + 1 <= 1/epsilon and narrow r, l0.
UnstableTerm unstable_contribution(const FermatModel& model, const EpsilonChamber& chamber,
                                   int r, const std::vector<int>& l0);

/// Size of the strict b-set of coordinate j for (r, l0).
int cech_rank(const FermatModel& model, int j, int r, const std::vector<int>& l0);

}  // namespace kwall
