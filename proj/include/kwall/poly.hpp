#pragma once

// Dense univariate polynomials over Q in the variable x = q^{1/d}.

#include <compare>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "kwall/rational.hpp"

namespace kwall {

class PolyX {
 public:
  PolyX() = default;
  /// Constant polynomial.
  PolyX(const Rat& c);  // NOLINT(google-explicit-constructor)
  PolyX(long c) : PolyX(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  /// Coefficients listed from x^0 upwards.
  explicit PolyX(std::vector<Rat> coeffs);
  PolyX(std::initializer_list<long> coeffs);

  static PolyX monomial(const Rat& c, int exponent);
  static PolyX x_power(int exponent) { return monomial(Rat(1), exponent); }
  static PolyX from_map(const std::map<int, Rat>& terms);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  int valuation() const;
  const Rat& lead() const;
  Rat coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  std::map<int, Rat> terms() const;

  Rat eval(const Rat& x) const;

  PolyX& operator+=(const PolyX& o);
  PolyX& operator-=(const PolyX& o);
  PolyX& operator*=(const PolyX& o);
  PolyX& operator*=(const Rat& s);

  friend PolyX operator+(PolyX a, const PolyX& b) { return a += b; }
  friend PolyX operator-(PolyX a, const PolyX& b) { return a -= b; }
  friend PolyX operator*(const PolyX& a, const PolyX& b);
  friend PolyX operator*(PolyX a, const Rat& s) { return a *= s; }
  friend PolyX operator*(const Rat& s, PolyX a) { return a *= s; }
  PolyX operator-() const;

  friend bool operator==(const PolyX&, const PolyX&) = default;

  /// Multiply by x^k (k >= 0) or divide by x^{-k} (must be exact).
  PolyX shift(int k) const;
  /// Reverse the coefficient list relative to degree `n` >= degree():
  /// x^n p(1/x).
  PolyX reversed(int n) const;
  /// p(x^e).
  PolyX stretch(int e) const;
  /// q(y) with q(x^e) = p(x); requires all exponents divisible by e.
  PolyX compress(int e) const;
  PolyX monic() const;
  PolyX pow(int e) const;

  /// Euclidean division; throws DivisionByZero for b = 0.
  static std::pair<PolyX, PolyX> divmod(const PolyX& a, const PolyX& b);
  /// True when b | a; the quotient is stored through `quotient` if given.
  static bool divides(const PolyX& b, const PolyX& a, PolyX* quotient);
  static PolyX gcd(PolyX a, PolyX b);
  /// Inverse of a modulo m; throws DivisionByZero when not coprime.
  static PolyX inverse_mod(const PolyX& a, const PolyX& m);

  PolyX mod(const PolyX& m) const { return divmod(*this, m).second; }

 private:
  void trim();
  std::vector<Rat> c_;
};

}  // namespace kwall
