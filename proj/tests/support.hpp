#pragma once

// Shared helpers for the test binaries: compact constructors and seeded
// random generators for polynomials, rational functions and K elements.

#include <random>
#include <vector>

#include "kwall/loopspace.hpp"
#include "kwall/ratfunc.hpp"
#include "kwall/series.hpp"

namespace kwall::testing {

/// 1 - q^{b} with b = units / d.
inline RationalFunctionQ one_minus_q(long units, int d) {
  return RationalFunctionQ::laurent({{0, Rat(1)}, {static_cast<int>(units), Rat(-1)}}, d);
}

inline RationalFunctionQ rf(std::initializer_list<long> num, std::initializer_list<long> den,
                            int d) {
  return RationalFunctionQ(PolyX(num), PolyX(den), d);
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

  Rat small_rat() {
    int num = uniform(-5, 5);
    int den = uniform(1, 3);
    return make_rat(num, den);
  }

  PolyX poly(int max_degree) {
    std::vector<Rat> c(uniform(0, max_degree) + 1);
    for (auto& x : c) x = small_rat();
    return PolyX(std::move(c));
  }

  /// Random function whose denominator is x^a * prod Phi_n^m with n <= max_block,
  /// optionally times a foreign factor (x - 2).
  RationalFunctionQ rational(int d, int max_block, bool allow_foreign = false) {
    PolyX num = poly(4);
    PolyX den = PolyX::x_power(uniform(0, 2));
    int factors = uniform(0, 2);
    for (int i = 0; i < factors; ++i) den *= cyclotomic(uniform(1, max_block)).pow(uniform(1, 2));
    if (allow_foreign && coin(0.3)) den *= PolyX{-2, 1};
    return RationalFunctionQ(num, den, d);
  }

  RationalFunctionQ nonzero_rational(int d, int max_block, bool allow_foreign = false) {
    for (;;) {
      auto f = rational(d, max_block, allow_foreign);
      if (!f.is_zero()) return f;
    }
  }

  KElement kelement(const std::vector<int>& narrow, int d, int max_block) {
    KElement f;
    for (int k : narrow)
      if (coin(0.7)) f.set(k, rational(d, max_block));
    return f;
  }

  /// Random element of K-: sum of 1-2 blocks A / Phi_n^m, deg A < m phi(n),
  /// with n <= n_max and m <= m_max.
  RationalFunctionQ minus_function(int d, int n_max, int m_max) {
    RationalFunctionQ acc = RationalFunctionQ::zero(d);
    const int blocks = uniform(1, 2);
    for (int b = 0; b < blocks; ++b) {
      const int n = uniform(1, n_max), m = uniform(1, m_max);
      const int deg = m * euler_phi(n) - 1;
      std::vector<Rat> c(deg + 1);
      for (auto& x : c) x = coin(0.6) ? small_rat() : Rat(0);
      acc += RationalFunctionQ::block_term(PolyX(std::move(c)), n, m, d);
    }
    return acc;
  }

  /// Random series supported on `monomials`, each present with probability p,
  /// with K- coefficients on random narrow components.
  KSeries minus_series(const SeriesConfig& cfg, const std::vector<int>& narrow,
                       const std::vector<Monomial>& monomials, double p, int n_max, int m_max) {
    KSeries out(cfg);
    for (const Monomial& m : monomials) {
      if (!coin(p)) continue;
      KElement c;
      c.set(narrow[uniform(0, static_cast<int>(narrow.size()) - 1)],
            minus_function(cfg.d, n_max, m_max));
      out.add(m, c);
    }
    return out;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Degree-`deg` monomials in the given variables (with repetition).
inline std::vector<Monomial> monomials_of_degree(const std::vector<Var>& vars, int deg) {
  std::vector<Monomial> out;
  std::vector<std::pair<Var, int>> stack;
  auto grow = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      out.push_back(Monomial(stack));
      return;
    }
    for (std::size_t i = from; i < vars.size(); ++i) {
      stack.emplace_back(vars[i], 1);
      self(self, i, left - 1);
      stack.pop_back();
    }
  };
  grow(grow, 0, deg);
  return out;
}

inline std::vector<Var> t_vars(const std::vector<int>& narrow, int tmin, int tmax) {
  std::vector<Var> out;
  for (int k : narrow)
    for (int j = tmin; j <= tmax; ++j) out.push_back(Var::t(k, j));
  return out;
}

inline std::vector<Var> u_vars(const std::vector<int>& narrow) {
  std::vector<Var> out;
  for (int k : narrow) out.push_back(Var::u(k));
  return out;
}

/// Independent oracle: coefficient of x^k (k may be negative) in the Laurent
/// expansion of num/den at x = 0, computed from the expanded polynomials.
inline Rat laurent_coeff_at_zero(const PolyX& num, const PolyX& den, int k) {
  const int v = den.valuation();
  // num/den = x^{-v} * num / den', den'(0) != 0.
  const int target = k + v;
  if (target < 0) return 0;
  std::vector<Rat> c(target + 1);
  Rat b0 = den.coeff(v);
  for (int i = 0; i <= target; ++i) {
    Rat acc = num.coeff(i);
    for (int j = 1; j <= i; ++j) acc -= den.coeff(v + j) * c[i - j];
    c[i] = acc / b0;
  }
  return c[target];
}

/// Independent oracle: coefficient of x^k in the expansion of num/den in
/// powers of 1/x around x = infinity.
inline Rat laurent_coeff_at_infinity(const PolyX& num, const PolyX& den, int k) {
  // With y = 1/x: num(1/y) / den(1/y) = y^{D-N} revN(y) / revD(y).
  const int big_n = num.degree(), big_d = den.degree();
  if (num.is_zero()) return 0;
  return laurent_coeff_at_zero(num.reversed(big_n).shift(std::max(0, big_d - big_n)),
                               den.reversed(big_d).shift(std::max(0, big_n - big_d)), -k);
}

/// Residues of f dq/q through the two expansion oracles.
inline Rat oracle_residue_zero(const RationalFunctionQ& f) {
  return laurent_coeff_at_zero(f.numerator(), f.denominator(), 0);
}
inline Rat oracle_residue_infinity(const RationalFunctionQ& f) {
  return -laurent_coeff_at_infinity(f.numerator(), f.denominator(), 0);
}

/// Independent Omega: f(1/x) by coefficient reversal, products of the raw
/// numerators and denominators, residues read off the two expansions.
inline Rat oracle_omega(const FermatModel& model, const KElement& f, const KElement& g) {
  Rat acc = 0;
  for (const auto& [k, fk] : f) {
    const RationalFunctionQ* gk = g.get(dual_index(model, k));
    if (!gk) continue;
    const PolyX n = fk.numerator(), dn = fk.denominator();
    const int a = n.degree(), b = dn.degree();
    const PolyX num = n.reversed(a).shift(std::max(0, b - a)) * gk->numerator();
    const PolyX den = dn.reversed(b).shift(std::max(0, a - b)) * gk->denominator();
    acc -= laurent_coeff_at_zero(num, den, 0) - laurent_coeff_at_infinity(num, den, 0);
  }
  return acc;
}

}  // namespace kwall::testing
