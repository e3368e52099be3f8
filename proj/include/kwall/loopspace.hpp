#pragma once

// The loop space K of narrow-state-valued rational functions of q, its
// residue symplectic form and the polarization K = K+ (+) K-.

#include <vector>

#include "kwall/ratfunc.hpp"
#include "kwall/statespace.hpp"

namespace kwall {

using KElement = StateVector<RationalFunctionQ>;

struct KDecomposition {
  KElement plus;   // Laurent polynomials in x = q^{1/d}
  KElement minus;  // regular at q = 0, vanishing at q = infinity
};

/// Laurent / proper split of a scalar rational function. Throws
/// MalformedPoleError when a denominator factor lies outside {x, Phi_n}.
struct ScalarSplit {
  RationalFunctionQ plus;
  RationalFunctionQ minus;
};
ScalarSplit split_scalar(const RationalFunctionQ& f);

/// One cyclotomic block of a partial-fraction expansion:
/// numerator / Phi_n(x)^multiplicity with deg numerator < multiplicity * phi(n).
struct BlockPart {
  int n = 0;
  int multiplicity = 0;
  PolyX numerator;
};
std::vector<BlockPart> partial_fraction_blocks(const RationalFunctionQ& f);

/// Phi_n-adic digits of a block: num / Phi_n^m = sum_{j<m} A_j / Phi_n^{j+1},
/// each deg A_j < phi(n). Returned indexed by j.
std::vector<PolyX> block_digits(int n, int m, const PolyX& num);
/// Inverse of block_digits.
RationalFunctionQ from_block_digits(int n, const std::vector<PolyX>& digits, int d);

/// Narrow support and poles only at 0, roots of unity and infinity.
void validate_kelement(const FermatModel& model, const KElement& f);

KElement invert_q(const KElement& f);

KDecomposition decompose(const KElement& f);

/// -[Res_{q=0} + Res_{q=inf}] (f(1/q), g(q))_W dq/q.
Rat omega(const FermatModel& model, const KElement& f, const KElement& g);

}  // namespace kwall
