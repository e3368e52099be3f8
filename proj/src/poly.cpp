#include "kwall/poly.hpp"

#include <algorithm>

#include "kwall/errors.hpp"

namespace kwall {

PolyX::PolyX(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

PolyX::PolyX(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyX::PolyX(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

PolyX PolyX::monomial(const Rat& c, int exponent) {
  if (exponent < 0) throw ValidationError("negative exponent in PolyX");
  PolyX p;
  if (c == 0) return p;
  p.c_.assign(exponent + 1, Rat(0));
  p.c_[exponent] = c;
  return p;
}

PolyX PolyX::from_map(const std::map<int, Rat>& terms) {
  PolyX p;
  if (terms.empty()) return p;
  if (terms.begin()->first < 0) throw ValidationError("negative exponent in PolyX");
  p.c_.assign(terms.rbegin()->first + 1, Rat(0));
  for (const auto& [e, c] : terms) p.c_[e] = c;
  p.trim();
  return p;
}

void PolyX::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int PolyX::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

const Rat& PolyX::lead() const {
  if (c_.empty()) throw DivisionByZero("leading coefficient of zero polynomial");
  return c_.back();
}

Rat PolyX::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[i];
}

std::map<int, Rat> PolyX::terms() const {
  std::map<int, Rat> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace(static_cast<int>(i), c_[i]);
  return out;
}

Rat PolyX::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyX& PolyX::operator+=(const PolyX& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyX& PolyX::operator-=(const PolyX& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyX operator*(const PolyX& a, const PolyX& b) {
  PolyX out;
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
  Rat tmp;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      out.c_[i + j] += tmp;
    }
  }
  out.trim();
  return out;
}

PolyX& PolyX::operator*=(const PolyX& o) { return *this = *this * o; }

PolyX& PolyX::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

PolyX PolyX::operator-() const {
  PolyX p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

PolyX PolyX::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  PolyX p;
  if (k > 0) {
    p.c_.assign(k, Rat(0));
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
    return p;
  }
  if (valuation() < -k) throw ValidationError("inexact division by a power of x");
  p.c_.assign(c_.begin() + (-k), c_.end());
  return p;
}

PolyX PolyX::reversed(int n) const {
  if (n < degree()) throw ValidationError("reversal degree below polynomial degree");
  if (is_zero()) return {};
  std::vector<Rat> r(n + 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[n - i] = c_[i];
  return PolyX(std::move(r));
}

PolyX PolyX::stretch(int e) const {
  if (e < 1) throw ValidationError("stretch factor must be positive");
  if (e == 1 || is_zero()) return *this;
  std::vector<Rat> r(static_cast<std::size_t>(degree()) * e + 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * e] = c_[i];
  return PolyX(std::move(r));
}

PolyX PolyX::compress(int e) const {
  if (e < 1) throw ValidationError("compress factor must be positive");
  if (e == 1 || is_zero()) return *this;
  std::vector<Rat> r(degree() / e + 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (i % e != 0) throw ValidationError("exponent not divisible in compress");
    r[i / e] = c_[i];
  }
  return PolyX(std::move(r));
}

PolyX PolyX::monic() const {
  if (is_zero()) return *this;
  return *this * Rat(1 / lead());
}

PolyX PolyX::pow(int e) const {
  if (e < 0) throw ValidationError("negative polynomial power");
  PolyX result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::pair<PolyX, PolyX> PolyX::divmod(const PolyX& a, const PolyX& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {PolyX(), a};
  std::vector<Rat> rem = a.c_;
  const int db = b.degree();
  std::vector<Rat> quo(a.degree() - db + 1, Rat(0));
  const Rat inv_lead = 1 / b.lead();
  Rat tmp;
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rat factor = rem[i] * inv_lead;
    quo[i - db] = factor;
    for (int j = 0; j <= db; ++j) {
      if (b.c_[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), b.c_[j].get_mpq_t());
      rem[i - db + j] -= tmp;
    }
  }
  rem.resize(db);
  return {PolyX(std::move(quo)), PolyX(std::move(rem))};
}

bool PolyX::divides(const PolyX& b, const PolyX& a, PolyX* quotient) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return false;
  if (quotient) *quotient = std::move(q);
  return true;
}

PolyX PolyX::gcd(PolyX a, PolyX b) {
  while (!b.is_zero()) {
    PolyX r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

PolyX PolyX::inverse_mod(const PolyX& a, const PolyX& m) {
  // Extended Euclid tracking only the cofactor of `a`.
  PolyX r0 = m, r1 = a.mod(m);
  PolyX s0, s1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    PolyX s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw DivisionByZero("polynomial not invertible modulo m");
  return (s0 * Rat(1 / r0.lead())).mod(m);
}

}  // namespace kwall
