#pragma once

// Truncated multivariate series in the input variables t^k_j (the
// coefficient of q^j phi_k in t(q)) and u^k, with coefficients either in the
// loop space (KSeries) or scalar rational functions (ScalarSeries).

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kwall/errors.hpp"
#include "kwall/loopspace.hpp"

namespace kwall {

struct Var {
  enum class Kind { T, U };
  Kind kind = Kind::U;
  int k = 0;  // state index
  int j = 0;  // q-power slot, t variables only

  static Var t(int k, int j) { return {Kind::T, k, j}; }
  static Var u(int k) { return {Kind::U, k, 0}; }
  bool is_t() const { return kind == Kind::T; }
  bool is_u() const { return kind == Kind::U; }
  std::string to_string() const;

  friend auto operator<=>(const Var&, const Var&) = default;
  friend bool operator==(const Var&, const Var&) = default;
};

/// Product of input variables with positive exponents, kept sorted.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<Var, int>> factors);
  static Monomial of(const Var& v, int e = 1) { return Monomial({{v, e}}); }

  const std::vector<std::pair<Var, int>>& factors() const { return f_; }
  int degree() const;
  int u_degree() const;
  int t_degree() const;
  int exponent(const Var& v) const;
  bool is_one() const { return f_.empty(); }

  Monomial operator*(const Monomial& o) const;
  /// Lowers the exponent of v by one; v must be present.
  Monomial without(const Var& v) const;
  bool divides(const Monomial& o) const;
  /// this / o; o must divide this.
  Monomial quotient(const Monomial& o) const;
  /// Every monomial dividing this one, including 1 and itself.
  std::vector<Monomial> divisors() const;
  /// Part of the monomial in u variables / t variables only.
  Monomial u_part() const;
  Monomial t_part() const;

  /// "t[k,j]^m·u[k]^n", or "1" for the empty monomial.
  std::string to_string() const;
  static Monomial parse(std::string_view text);

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<Var, int>> f_;
};

/// Graded order of the tail recursion: (u-degree, t-degree), then monomial.
bool graded_less(const Monomial& a, const Monomial& b);

struct SeriesConfig {
  int d = 1;
  int dmax = 0;  // total degree bound; -1 means the empty series
  int tmin = -2;
  int tmax = 2;

  friend bool operator==(const SeriesConfig&, const SeriesConfig&) = default;
};

template <class C>
class Series {
 public:
  Series() = default;
  explicit Series(SeriesConfig cfg) : cfg_(cfg) {}

  const SeriesConfig& config() const { return cfg_; }
  const std::map<Monomial, C>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c * m; monomials above the truncation order are dropped.
  void add(const Monomial& m, const C& c) {
    if (m.degree() > cfg_.dmax || is_zero_value(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (is_zero_value(it->second)) terms_.erase(it);
  }
  void set(const Monomial& m, const C& c) {
    terms_.erase(m);
    add(m, c);
  }
  const C* get(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  Series& operator+=(const Series& o) {
    check_compatible(o);
    cfg_.dmax = std::min(cfg_.dmax, o.cfg_.dmax);
    drop_above(cfg_.dmax);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Series operator-() const {
    Series r(cfg_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, C(-c));
    return r;
  }
  Series& operator-=(const Series& o) { return *this += -o; }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  template <class F>
  auto map_coefficients(F&& f) const {
    using R = std::decay_t<decltype(f(std::declval<const C&>()))>;
    Series<R> r(cfg_);
    for (const auto& [m, c] : terms_) r.add(m, f(c));
    return r;
  }

  /// Terms whose monomial satisfies pred.
  template <class P>
  Series filter(P&& pred) const {
    Series r(cfg_);
    for (const auto& [m, c] : terms_)
      if (pred(m)) r.terms_.emplace(m, c);
    return r;
  }

  Series with_dmax(int dmax) const {
    Series r = *this;
    r.cfg_.dmax = dmax;
    r.drop_above(dmax);
    return r;
  }

  void check_compatible(const Series& o) const {
    if (cfg_.d != o.cfg_.d || cfg_.tmin != o.cfg_.tmin || cfg_.tmax != o.cfg_.tmax)
      throw ValidationError("series configurations are incompatible");
  }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  void drop_above(int dmax) {
    std::erase_if(terms_, [dmax](const auto& kv) { return kv.first.degree() > dmax; });
  }

  SeriesConfig cfg_;
  std::map<Monomial, C> terms_;
};

using KSeries = Series<KElement>;
using ScalarSeries = Series<RationalFunctionQ>;

/// Truncated product with a caller-supplied coefficient product.
template <class C, class Mul>
Series<C> multiply_series(const Series<C>& a, const Series<C>& b, Mul&& mul) {
  a.check_compatible(b);
  SeriesConfig cfg = a.config();
  cfg.dmax = std::min(a.config().dmax, b.config().dmax);
  Series<C> out(cfg);
  for (const auto& [ma, ca] : a) {
    const int da = ma.degree();
    if (da > cfg.dmax) continue;
    for (const auto& [mb, cb] : b) {
      if (da + mb.degree() > cfg.dmax) continue;
      out.add(ma * mb, mul(ca, cb));
    }
  }
  return out;
}

inline Rat scale_coeff(const Rat& c, const Rat& s) { return c * s; }
inline RationalFunctionQ scale_coeff(const RationalFunctionQ& c, const Rat& s) { return c * s; }
template <class S>
StateVector<S> scale_coeff(const StateVector<S>& v, const Rat& s) {
  return v.scaled(s);
}

/// Formal partial derivative. The result is exact up to degree dmax - 1,
/// which becomes its truncation order.
template <class C>
Series<C> differentiate(const Series<C>& f, const Var& v) {
  SeriesConfig cfg = f.config();
  cfg.dmax = std::max(-1, cfg.dmax - 1);
  Series<C> out(cfg);
  for (const auto& [m, c] : f) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    out.add(m.without(v), scale_coeff(c, Rat(e)));
  }
  return out;
}

enum class SeriesOp { Add, Mul };

/// add | mul on K-valued series; products use phi_i phi_j = phi_{i+j mod d}.
KSeries series_arith(const FermatModel& model, const KSeries& a, const KSeries& b, SeriesOp op);
KSeries scale(const KSeries& a, const Rat& s);

/// invert_q applied to every coefficient.
KSeries substitute_invert_q(const KSeries& f);

/// Monomial-by-monomial pairing: sum_{m1 m2} (F_{m1}, G_{m2})_W m1 m2.
ScalarSeries pair_series(const FermatModel& model, const KSeries& f, const KSeries& g);

/// sum_{k narrow, tmin <= j <= tmax} t[k,j] phi_k q^{-j}, i.e. t(1/q).
KSeries input_series(const FermatModel& model, const SeriesConfig& cfg);

/// The constant (1 - q) phi_0.
KSeries dilaton_series(const SeriesConfig& cfg);

/// Polynomial in power-sum symbols p_1, ..., p_bound with Adams operations
/// Psi^k(p_r) = p_{kr}; symbols beyond the bound are truncated to zero.
class LambdaScalar {
 public:
  explicit LambdaScalar(int bound = 0) : bound_(bound) {}
  static LambdaScalar constant(const Rat& c, int bound = 0);
  /// The generator p_r.
  static LambdaScalar power_sum(int r, int bound);

  int bound() const { return bound_; }
  bool is_zero() const { return terms_.empty(); }
  LambdaScalar adams(int k) const;

  LambdaScalar& operator+=(const LambdaScalar& o);
  LambdaScalar operator-() const;
  friend LambdaScalar operator+(LambdaScalar a, const LambdaScalar& b) { return a += b; }
  friend LambdaScalar operator*(const LambdaScalar& a, const LambdaScalar& b);
  LambdaScalar operator*(const Rat& s) const;

  friend bool operator==(const LambdaScalar&, const LambdaScalar&) = default;

 private:
  void add_term(std::vector<int> exps, const Rat& c);
  int bound_;
  std::map<std::vector<int>, Rat> terms_;  // exponent vector of p_1..p_bound
};

/// Opaque correlator placeholder <<phi_{k1} L^{j1}, ... | lights>>^{chamber}.
struct CorrelatorSymbol {
  std::vector<std::pair<int, int>> insertions;  // (state index, L exponent)
  std::vector<int> lights;
  std::string chamber;
  std::string to_string() const;
};

}  // namespace kwall
