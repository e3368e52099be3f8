#pragma once

// Cyclotomic polynomials, divisor arithmetic and the denominator dictionary
// {x^a, Phi_n(x)^m, remainder} used for all pole bookkeeping.

#include <map>
#include <vector>

#include "kwall/poly.hpp"

namespace kwall {

long euler_phi(long n);
std::vector<long> divisors(long n);

/// The n-th cyclotomic polynomial Phi_n(x) (integer coefficients, n >= 1).
/// Results are memoized; the cache is guarded and safe to share.
const PolyX& cyclotomic(int n);

/// All n >= 1 with euler_phi(n) <= degree, ascending. Any cyclotomic factor
/// of a polynomial of this degree has its order in this list.
const std::vector<int>& cyclotomic_orders_up_to_degree(int degree);

/// Cheap necessary condition for Phi_n | p: p vanishes at a primitive n-th
/// root of unity modulo a prime p = 1 (mod n). `false` means "certainly
/// not divisible"; `true` must be confirmed by exact division.
bool may_divide_cyclotomic(int n, const PolyX& p);

/// Multiplicity of Phi_n in p, dividing it out of `p` in place.
int strip_cyclotomic(int n, PolyX& p);

/// p = scalar * x^x_order * prod Phi_n^m * remainder, remainder monic with
/// no root at 0 and no root of unity.
struct Factorization {
  Rat scalar{1};
  int x_order = 0;
  std::map<int, int> blocks;
  PolyX remainder{1};
};

/// Complete split of p against the cyclotomic dictionary. p must be nonzero.
Factorization factor_denominator(const PolyX& p);

}  // namespace kwall
