#pragma once

// Exact rational functions of q with exponents in (1/d)Z, stored as rational
// functions of x = q^{1/d} whose denominator is kept factored as
//
//   x^a * prod_n Phi_n(x)^{m_n} * R(x)
//
// with R monic and free of roots at 0 and at roots of unity. Every value is
// reduced: the numerator shares no factor with the denominator. All scalar
// content lives in the numerator, so the representation is canonical.

#include <map>
#include <string>
#include <vector>

#include "kwall/cyclotomic.hpp"
#include "kwall/poly.hpp"
#include "kwall/rational.hpp"

namespace kwall {

/// Pole data of a rational function. Orders at 0 and infinity are measured
/// in powers of q (so they may be fractional multiples of 1/d).
struct PoleReport {
  struct Block {
    int n = 0;         // x-level cyclotomic order
    int order = 0;     // multiplicity of Phi_n(x) in the denominator
    int q_order = 0;   // order of the corresponding q-roots: n / gcd(n, d)
    friend bool operator==(const Block&, const Block&) = default;
  };
  Rat at_zero{0};
  Rat at_infinity{0};
  std::vector<Block> blocks;
  /// Degree of the denominator part that is not x^a times cyclotomic blocks.
  int remainder_degree = 0;

  bool has_root_of_unity_pole() const { return !blocks.empty(); }
};

class RationalFunctionQ {
 public:
  /// The zero function with d = 1.
  RationalFunctionQ() = default;
  RationalFunctionQ(const Rat& c, int d);
  RationalFunctionQ(const PolyX& num, int d);
  RationalFunctionQ(const PolyX& num, const PolyX& den, int d);

  static RationalFunctionQ zero(int d) { return RationalFunctionQ(Rat(0), d); }
  static RationalFunctionQ one(int d) { return RationalFunctionQ(Rat(1), d); }
  /// c * q^{exponent}; exponent must lie in (1/d)Z.
  static RationalFunctionQ q_power(const Rat& exponent, int d, const Rat& c = Rat(1));
  /// Laurent polynomial sum c_e x^e with e in Z (x-exponents).
  static RationalFunctionQ laurent(const std::map<int, Rat>& x_terms, int d);
  /// c * x^k / Phi_n(x)^m.
  static RationalFunctionQ block_term(const PolyX& num, int n, int m, int d);

  int d() const { return d_; }
  bool is_zero() const { return num_.is_zero(); }
  const PolyX& numerator() const { return num_; }
  int x_order() const { return x_order_; }
  const std::map<int, int>& blocks() const { return blocks_; }
  const PolyX& remainder() const { return other_; }
  /// Denominator multiplied out (monic).
  PolyX denominator() const;

  /// Poles only at 0 and infinity.
  bool is_laurent() const { return blocks_.empty() && other_.degree() == 0; }
  /// x-exponent -> coefficient; requires is_laurent().
  std::map<int, Rat> laurent_terms() const;
  /// Largest e with c * x^e appearing, as numerator degree minus denominator degree.
  int degree_difference() const;

  /// Value at a rational point where the denominator does not vanish.
  Rat eval(const Rat& x) const;

  /// Same function written with x' = q^{1/(d*e)}.
  RationalFunctionQ lift(int e) const;

  RationalFunctionQ& operator+=(const RationalFunctionQ& o);
  RationalFunctionQ& operator-=(const RationalFunctionQ& o);
  RationalFunctionQ& operator*=(const RationalFunctionQ& o);
  RationalFunctionQ& operator/=(const RationalFunctionQ& o);
  RationalFunctionQ& operator*=(const Rat& s);

  friend RationalFunctionQ operator+(RationalFunctionQ a, const RationalFunctionQ& b) { return a += b; }
  friend RationalFunctionQ operator-(RationalFunctionQ a, const RationalFunctionQ& b) { return a -= b; }
  friend RationalFunctionQ operator*(RationalFunctionQ a, const RationalFunctionQ& b) { return a *= b; }
  friend RationalFunctionQ operator/(RationalFunctionQ a, const RationalFunctionQ& b) { return a /= b; }
  friend RationalFunctionQ operator*(RationalFunctionQ a, const Rat& s) { return a *= s; }
  friend RationalFunctionQ operator*(const Rat& s, RationalFunctionQ a) { return a *= s; }
  RationalFunctionQ operator-() const;
  RationalFunctionQ pow(int e) const;

  friend bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b);

  /// Principal part at the block Phi_n: returns A with deg A < m*phi(n) such
  /// that f - A / Phi_n^m is regular at the roots of Phi_n (m = multiplicity).
  PolyX principal_numerator(int n) const;

  std::string to_string() const;

 private:
  void reduce();
  void absorb_denominator(const PolyX& den);
  /// Denominator with the block `skip` removed, reduced modulo `modulus`.
  PolyX cofactor_mod(int skip, const PolyX& modulus) const;

  int d_ = 1;
  PolyX num_;
  int x_order_ = 0;
  std::map<int, int> blocks_;
  PolyX other_{1};
};

/// Arithmetic wrapper with the operator spelled out; `op` is one of
/// "add", "sub", "mul", "div".
RationalFunctionQ arith(const RationalFunctionQ& f, const RationalFunctionQ& g,
                        const std::string& op);

/// f(1/q).
RationalFunctionQ invert_q(const RationalFunctionQ& f);

PoleReport pole_orders(const RationalFunctionQ& f);

/// Coefficient of q^0 in the Laurent expansion at q = 0 (residue of f dq/q).
Rat residue_zero(const RationalFunctionQ& f);
/// Residue of f dq/q at infinity: minus the q^0 coefficient of the expansion
/// in 1/q.
Rat residue_infinity(const RationalFunctionQ& f);

/// prod_i (1 - q^{-b_i}) for characters q^{b_i}. An empty list gives 1.
RationalFunctionQ euler_class(const std::vector<QExp>& characters, int d);

/// sum_{k=0}^{d-1} zeta^{k m} for a primitive d-th root zeta: d if d | m, else 0.
long roots_of_unity_power_sum(long d, long m);

/// Checks sum_{k<d} 1/(1 - zeta^k x) = d / (1 - x^d) exactly by reducing
/// both sides to power-sum orthogonality.
bool verify_ghost_identity(int d);

/// (sum_{k<d} 1/(1 - zeta^k y^{1/d}))^{-1} as a rational function of y
/// (returned with d = 1). Evaluates to (1 - y)/d.
RationalFunctionQ aggregate_node_factor(int d);

}  // namespace kwall
