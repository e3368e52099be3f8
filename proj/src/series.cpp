#include "kwall/series.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace kwall {

std::string Var::to_string() const {
  if (is_t()) return "t[" + std::to_string(k) + "," + std::to_string(j) + "]";
  return "u[" + std::to_string(k) + "]";
}

Monomial::Monomial(std::vector<std::pair<Var, int>> factors) {
  std::sort(factors.begin(), factors.end());
  for (auto& [v, e] : factors) {
    if (e < 0) throw ValidationError("negative exponent in monomial");
    if (e == 0) continue;
    if (!f_.empty() && f_.back().first == v)
      f_.back().second += e;
    else
      f_.emplace_back(v, e);
  }
}

int Monomial::degree() const {
  int n = 0;
  for (const auto& [v, e] : f_) n += e;
  return n;
}

int Monomial::u_degree() const {
  int n = 0;
  for (const auto& [v, e] : f_)
    if (v.is_u()) n += e;
  return n;
}

int Monomial::t_degree() const { return degree() - u_degree(); }

int Monomial::exponent(const Var& v) const {
  for (const auto& [w, e] : f_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<std::pair<Var, int>> all = f_;
  all.insert(all.end(), o.f_.begin(), o.f_.end());
  return Monomial(std::move(all));
}

Monomial Monomial::without(const Var& v) const {
  Monomial r = *this;
  for (auto it = r.f_.begin(); it != r.f_.end(); ++it) {
    if (it->first != v) continue;
    if (--it->second == 0) r.f_.erase(it);
    return r;
  }
  throw ValidationError("variable " + v.to_string() + " does not divide " + to_string());
}

bool Monomial::divides(const Monomial& o) const {
  for (const auto& [v, e] : f_)
    if (o.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
  if (!o.divides(*this)) throw ValidationError(o.to_string() + " does not divide " + to_string());
  Monomial r;
  for (const auto& [v, e] : f_)
    if (int left = e - o.exponent(v); left > 0) r.f_.emplace_back(v, left);
  return r;
}

std::vector<Monomial> Monomial::divisors() const {
  std::vector<Monomial> out{Monomial()};
  for (const auto& [v, e] : f_) {
    std::vector<Monomial> next;
    for (const Monomial& m : out)
      for (int k = 0; k <= e; ++k) {
        Monomial x = m;
        if (k > 0) x.f_.emplace_back(v, k);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

Monomial Monomial::u_part() const {
  Monomial r;
  for (const auto& f : f_)
    if (f.first.is_u()) r.f_.push_back(f);
  return r;
}

Monomial Monomial::t_part() const {
  Monomial r;
  for (const auto& f : f_)
    if (f.first.is_t()) r.f_.push_back(f);
  return r;
}

std::string Monomial::to_string() const {
  if (f_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : f_) {
    if (!out.empty()) out += "·";
    out += v.to_string();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}
  bool done() const { return i_ >= s_.size(); }
  bool eat(std::string_view tok) {
    if (s_.substr(i_, tok.size()) != tok) return false;
    i_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }
  int integer() {
    int v = 0;
    auto [p, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected an integer");
    i_ = p - s_.data();
    return v;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad monomial '" + std::string(s_) + "': " + why);
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

Monomial Monomial::parse(std::string_view text) {
  if (text == "1") return Monomial();
  Cursor c(text);
  std::vector<std::pair<Var, int>> factors;
  for (;;) {
    Var v;
    if (c.eat("t[")) {
      int k = c.integer();
      c.expect(",");
      int j = c.integer();
      v = Var::t(k, j);
    } else if (c.eat("u[")) {
      v = Var::u(c.integer());
    } else {
      c.fail("expected t[...] or u[...]");
    }
    c.expect("]");
    int e = 1;
    if (c.eat("^")) e = c.integer();
    if (e <= 0) c.fail("exponents must be positive");
    factors.emplace_back(v, e);
    if (c.done()) break;
    if (!c.eat("·") && !c.eat("*")) c.fail("expected a separator");
  }
  return Monomial(std::move(factors));
}

bool graded_less(const Monomial& a, const Monomial& b) {
  const int ua = a.u_degree(), ub = b.u_degree();
  if (ua != ub) return ua < ub;
  const int ta = a.t_degree(), tb = b.t_degree();
  if (ta != tb) return ta < tb;
  return a < b;
}

KSeries series_arith(const FermatModel& model, const KSeries& a, const KSeries& b,
                     SeriesOp op) {
  if (a.config().d != model.d()) throw ValidationError("series d does not match the model");
  if (op == SeriesOp::Add) return a + b;
  return multiply_series(a, b, [&model](const KElement& x, const KElement& y) {
    return multiply(model, x, y);
  });
}

KSeries scale(const KSeries& a, const Rat& s) {
  return a.map_coefficients([&s](const KElement& c) { return c.scaled(s); });
}

KSeries substitute_invert_q(const KSeries& f) {
  return f.map_coefficients([](const KElement& c) { return invert_q(c); });
}

ScalarSeries pair_series(const FermatModel& model, const KSeries& f, const KSeries& g) {
  f.check_compatible(g);
  SeriesConfig cfg = f.config();
  cfg.dmax = std::min(f.config().dmax, g.config().dmax);
  ScalarSeries out(cfg);
  const RationalFunctionQ zero = RationalFunctionQ::zero(model.d());
  for (const auto& [ma, ca] : f) {
    const int da = ma.degree();
    for (const auto& [mb, cb] : g) {
      if (da + mb.degree() > cfg.dmax) continue;
      out.add(ma * mb, pair_vectors(model, ca, cb, zero));
    }
  }
  return out;
}

KSeries input_series(const FermatModel& model, const SeriesConfig& cfg) {
  KSeries out(cfg);
  for (int k : narrow_set(model))
    for (int j = cfg.tmin; j <= cfg.tmax; ++j)
      out.add(Monomial::of(Var::t(k, j)),
              KElement(k, RationalFunctionQ::q_power(Rat(-j), cfg.d)));
  return out;
}

KSeries dilaton_series(const SeriesConfig& cfg) {
  KSeries out(cfg);
  out.add(Monomial(), KElement(0, RationalFunctionQ::laurent({{0, 1}, {cfg.d, -1}}, cfg.d)));
  return out;
}

LambdaScalar LambdaScalar::constant(const Rat& c, int bound) {
  LambdaScalar r(bound);
  r.add_term(std::vector<int>(bound, 0), c);
  return r;
}

LambdaScalar LambdaScalar::power_sum(int r, int bound) {
  if (r < 1) throw ValidationError("power sums are indexed from 1");
  LambdaScalar out(bound);
  if (r > bound) return out;
  std::vector<int> e(bound, 0);
  e[r - 1] = 1;
  out.add_term(std::move(e), 1);
  return out;
}

void LambdaScalar::add_term(std::vector<int> exps, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LambdaScalar LambdaScalar::adams(int k) const {
  if (k < 1) throw ValidationError("Adams operations are indexed from 1");
  LambdaScalar out(bound_);
  for (const auto& [exps, c] : terms_) {
    std::vector<int> image(bound_, 0);
    bool survives = true;
    for (int r = 1; r <= bound_ && survives; ++r) {
      if (exps[r - 1] == 0) continue;
      if (k * r > bound_)
        survives = false;
      else
        image[k * r - 1] += exps[r - 1];
    }
    if (survives) out.add_term(std::move(image), c);
  }
  return out;
}

LambdaScalar& LambdaScalar::operator+=(const LambdaScalar& o) {
  if (o.bound_ != bound_) throw ValidationError("power-sum bounds differ");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LambdaScalar LambdaScalar::operator-() const { return *this * Rat(-1); }

LambdaScalar operator*(const LambdaScalar& a, const LambdaScalar& b) {
  if (a.bound_ != b.bound_) throw ValidationError("power-sum bounds differ");
  LambdaScalar out(a.bound_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  return out;
}

LambdaScalar LambdaScalar::operator*(const Rat& s) const {
  LambdaScalar out(bound_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * s);
  return out;
}

std::string CorrelatorSymbol::to_string() const {
  std::ostringstream out;
  out << "<<";
  for (std::size_t i = 0; i < insertions.size(); ++i) {
    if (i) out << ", ";
    const auto& [k, l] = insertions[i];
    out << "phi_" << k;
    if (l != 0) out << " L^" << l;
  }
  if (!lights.empty()) {
    out << " |";
    for (int k : lights) out << " phi_" << k;
  }
  out << ">>";
  if (!chamber.empty()) out << "^" << chamber;
  return out.str();
}

}  // namespace kwall
