#include "kwall/ratfunc.hpp"

#include <numeric>
#include <sstream>

#include "kwall/errors.hpp"

namespace kwall {

namespace {

void check_d(int d) {
  if (d < 1) throw ValidationError("exponent denominator d must be positive");
}

int block_degree(const std::map<int, int>& blocks) {
  int deg = 0;
  for (const auto& [n, m] : blocks) deg += static_cast<int>(euler_phi(n)) * m;
  return deg;
}

PolyX power_mod(const PolyX& base, int e, const PolyX& modulus) {
  PolyX result = PolyX(1).mod(modulus), b = base.mod(modulus);
  while (e > 0) {
    if (e & 1) result = (result * b).mod(modulus);
    e >>= 1;
    if (e) b = (b * b).mod(modulus);
  }
  return result;
}

std::string q_monomial(int x_exp, int d) {
  Rat e = make_rat(x_exp, d);
  if (e == 0) return "";
  if (e == 1) return "q";
  if (is_integer(e)) return "q^" + to_string(e);
  return "q^(" + to_string(e) + ")";
}

std::string render_poly(const PolyX& p, int d, int shift) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string mono = q_monomial(e - shift, d);
    Rat mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      out << to_string(mag);
    } else {
      if (mag != 1) out << to_string(mag) << "*";
      out << mono;
    }
  }
  return out.str();
}

}  // namespace

RationalFunctionQ::RationalFunctionQ(const Rat& c, int d) : d_(d), num_(c) { check_d(d); }

RationalFunctionQ::RationalFunctionQ(const PolyX& num, int d) : d_(d), num_(num) { check_d(d); }

RationalFunctionQ::RationalFunctionQ(const PolyX& num, const PolyX& den, int d)
    : d_(d), num_(num) {
  check_d(d);
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  absorb_denominator(den);
  reduce();
}

RationalFunctionQ RationalFunctionQ::q_power(const Rat& exponent, int d, const Rat& c) {
  QExp e = QExp::from_rat(exponent, d);
  return laurent({{static_cast<int>(e.units), c}}, d);
}

RationalFunctionQ RationalFunctionQ::laurent(const std::map<int, Rat>& x_terms, int d) {
  RationalFunctionQ f(Rat(0), d);
  if (x_terms.empty()) return f;
  const int low = std::min(0, x_terms.begin()->first);
  std::map<int, Rat> shifted;
  for (const auto& [e, c] : x_terms)
    if (c != 0) shifted[e - low] = c;
  f.num_ = PolyX::from_map(shifted);
  f.x_order_ = -low;
  f.reduce();
  return f;
}

RationalFunctionQ RationalFunctionQ::block_term(const PolyX& num, int n, int m, int d) {
  RationalFunctionQ f(num, d);
  if (m > 0 && !num.is_zero()) f.blocks_[n] = m;
  f.reduce();
  return f;
}

void RationalFunctionQ::absorb_denominator(const PolyX& den) {
  Factorization fac = factor_denominator(den);
  num_ *= Rat(1 / fac.scalar);
  x_order_ += fac.x_order;
  for (const auto& [n, m] : fac.blocks) blocks_[n] += m;
  other_ *= fac.remainder;
}

void RationalFunctionQ::reduce() {
  if (num_.is_zero()) {
    x_order_ = 0;
    blocks_.clear();
    other_ = PolyX(1);
    return;
  }
  if (x_order_ > 0) {
    int c = std::min(num_.valuation(), x_order_);
    if (c > 0) {
      num_ = num_.shift(-c);
      x_order_ -= c;
    }
  }
  for (auto it = blocks_.begin(); it != blocks_.end();) {
    const PolyX& phi = cyclotomic(it->first);
    while (it->second > 0 && may_divide_cyclotomic(it->first, num_)) {
      PolyX quo;
      if (!PolyX::divides(phi, num_, &quo)) break;
      num_ = std::move(quo);
      --it->second;
    }
    it = it->second == 0 ? blocks_.erase(it) : std::next(it);
  }
  if (other_.degree() > 0) {
    PolyX g = PolyX::gcd(num_, other_);
    if (g.degree() > 0) {
      num_ = PolyX::divmod(num_, g).first;
      other_ = PolyX::divmod(other_, g).first.monic();
    }
  }
}

PolyX RationalFunctionQ::denominator() const {
  PolyX den = PolyX::x_power(x_order_);
  for (const auto& [n, m] : blocks_) den *= cyclotomic(n).pow(m);
  return den * other_;
}

std::map<int, Rat> RationalFunctionQ::laurent_terms() const {
  if (!is_laurent()) throw ValidationError("not a Laurent polynomial: " + to_string());
  std::map<int, Rat> out;
  for (const auto& [e, c] : num_.terms()) out[e - x_order_] = c;
  return out;
}

int RationalFunctionQ::degree_difference() const {
  return num_.degree() - (x_order_ + block_degree(blocks_) + other_.degree());
}

Rat RationalFunctionQ::eval(const Rat& x) const {
  Rat den = denominator().eval(x);
  if (den == 0) throw DivisionByZero("evaluation at a pole");
  return num_.eval(x) / den;
}

RationalFunctionQ RationalFunctionQ::lift(int e) const {
  if (e < 1) throw ValidationError("lift factor must be positive");
  if (e == 1) return *this;
  return RationalFunctionQ(num_.stretch(e), denominator().stretch(e), d_ * e);
}

namespace {

// Bring two operands to a common exponent denominator.
std::pair<RationalFunctionQ, RationalFunctionQ> common(const RationalFunctionQ& a,
                                                       const RationalFunctionQ& b) {
  const int l = std::lcm(a.d(), b.d());
  return {a.lift(l / a.d()), b.lift(l / b.d())};
}

}  // namespace

RationalFunctionQ& RationalFunctionQ::operator+=(const RationalFunctionQ& o) {
  if (o.d_ != d_) {
    auto [a, b] = common(*this, o);
    return *this = a + b;
  }
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;

  const int a = std::max(x_order_, o.x_order_);
  std::map<int, int> blocks = blocks_;
  for (const auto& [n, m] : o.blocks_) blocks[n] = std::max(blocks[n], m);
  PolyX other = other_, mult_self(1), mult_other(1);
  if (other_.degree() > 0 || o.other_.degree() > 0) {
    PolyX g = PolyX::gcd(other_, o.other_);
    mult_self = PolyX::divmod(o.other_, g).first;
    mult_other = PolyX::divmod(other_, g).first;
    other = other_ * mult_self;
  }
  mult_self *= PolyX::x_power(a - x_order_);
  mult_other *= PolyX::x_power(a - o.x_order_);
  for (const auto& [n, m] : blocks) {
    auto mine = blocks_.find(n);
    auto theirs = o.blocks_.find(n);
    int m_self = mine == blocks_.end() ? 0 : mine->second;
    int m_other = theirs == o.blocks_.end() ? 0 : theirs->second;
    if (m > m_self) mult_self *= cyclotomic(n).pow(m - m_self);
    if (m > m_other) mult_other *= cyclotomic(n).pow(m - m_other);
  }
  num_ = num_ * mult_self + o.num_ * mult_other;
  x_order_ = a;
  blocks_ = std::move(blocks);
  other_ = std::move(other);
  reduce();
  return *this;
}

RationalFunctionQ& RationalFunctionQ::operator-=(const RationalFunctionQ& o) { return *this += -o; }

RationalFunctionQ& RationalFunctionQ::operator*=(const RationalFunctionQ& o) {
  if (o.d_ != d_) {
    auto [a, b] = common(*this, o);
    return *this = a * b;
  }
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = o;
  num_ *= o.num_;
  x_order_ += o.x_order_;
  for (const auto& [n, m] : o.blocks_) blocks_[n] += m;
  other_ *= o.other_;
  reduce();
  return *this;
}

RationalFunctionQ& RationalFunctionQ::operator/=(const RationalFunctionQ& o) {
  if (o.is_zero()) throw DivisionByZero("rational function division by zero");
  if (o.d_ != d_) {
    auto [a, b] = common(*this, o);
    return *this = a / b;
  }
  num_ *= o.denominator();
  absorb_denominator(o.num_);
  reduce();
  return *this;
}

RationalFunctionQ& RationalFunctionQ::operator*=(const Rat& s) {
  num_ *= s;
  if (s == 0) reduce();
  return *this;
}

RationalFunctionQ RationalFunctionQ::operator-() const {
  RationalFunctionQ f = *this;
  f.num_ = -f.num_;
  return f;
}

RationalFunctionQ RationalFunctionQ::pow(int e) const {
  if (e < 0) return one(d_) / pow(-e);
  RationalFunctionQ result = one(d_), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b) {
  if (a.d_ != b.d_) {
    auto [la, lb] = common(a, b);
    return la == lb;
  }
  return a.num_ == b.num_ && a.x_order_ == b.x_order_ && a.blocks_ == b.blocks_ &&
         a.other_ == b.other_;
}

PolyX RationalFunctionQ::cofactor_mod(int skip, const PolyX& modulus) const {
  PolyX acc = power_mod(PolyX::x_power(1), x_order_, modulus);
  for (const auto& [n, m] : blocks_) {
    if (n == skip) continue;
    acc = (acc * power_mod(cyclotomic(n), m, modulus)).mod(modulus);
  }
  if (other_.degree() > 0) acc = (acc * other_.mod(modulus)).mod(modulus);
  return acc;
}

PolyX RationalFunctionQ::principal_numerator(int n) const {
  auto it = blocks_.find(n);
  if (it == blocks_.end()) return {};
  const PolyX modulus = cyclotomic(n).pow(it->second);
  const PolyX cof = cofactor_mod(n, modulus);
  return (num_.mod(modulus) * PolyX::inverse_mod(cof, modulus)).mod(modulus);
}

std::string RationalFunctionQ::to_string() const {
  if (is_zero()) return "0";
  if (is_laurent()) return render_poly(num_, d_, x_order_);
  std::string den = render_poly(denominator(), d_, 0);
  return "(" + render_poly(num_, d_, 0) + ")/(" + den + ")";
}

RationalFunctionQ arith(const RationalFunctionQ& f, const RationalFunctionQ& g,
                        const std::string& op) {
  if (op == "add") return f + g;
  if (op == "sub") return f - g;
  if (op == "mul") return f * g;
  if (op == "div") return f / g;
  throw ValidationError("unknown arithmetic operation '" + op + "'");
}

RationalFunctionQ invert_q(const RationalFunctionQ& f) {
  if (f.is_zero()) return f;
  // f(1/x) = x^{T-N} rev(num) / rev(den), where rev(x^a) = 1,
  // rev(Phi_1) = -Phi_1, rev(Phi_n) = Phi_n for n >= 2, rev(R) = R(0) * R'.
  const PolyX& num = f.numerator();
  const int big_n = num.degree();
  const int big_t = f.x_order() + block_degree(f.blocks()) + f.remainder().degree();
  PolyX rev = num.reversed(big_n);
  Rat scale = 1;
  auto phi1 = f.blocks().find(1);
  if (phi1 != f.blocks().end() && phi1->second % 2 == 1) scale = -1;
  PolyX rem_rev = f.remainder().reversed(f.remainder().degree());
  scale *= rem_rev.lead();
  rem_rev = rem_rev.monic();

  PolyX new_den = rem_rev;
  for (const auto& [n, m] : f.blocks()) new_den *= cyclotomic(n).pow(m);
  int shift = big_t - big_n;
  if (shift >= 0) {
    rev = rev.shift(shift);
  } else {
    new_den = new_den.shift(-shift);
  }
  return RationalFunctionQ(rev * Rat(1 / scale), new_den, f.d());
}

PoleReport pole_orders(const RationalFunctionQ& f) {
  PoleReport r;
  if (f.is_zero()) return r;
  r.at_zero = make_rat(f.x_order(), f.d());
  r.at_infinity = make_rat(std::max(0, f.degree_difference()), f.d());
  for (const auto& [n, m] : f.blocks())
    r.blocks.push_back({n, m, n / std::gcd(n, f.d())});
  r.remainder_degree = f.remainder().degree();
  return r;
}

Rat residue_zero(const RationalFunctionQ& f) {
  if (f.is_zero()) return 0;
  const int a = f.x_order();
  PolyX b = f.remainder();
  for (const auto& [n, m] : f.blocks()) b *= cyclotomic(n).pow(m);
  // Power series num/b up to x^a; the x^a coefficient is the q^0 term of f.
  std::vector<Rat> c(a + 1);
  const Rat inv_b0 = 1 / b.coeff(0);
  for (int k = 0; k <= a; ++k) {
    Rat acc = f.numerator().coeff(k);
    for (int i = 1; i <= std::min(k, b.degree()); ++i) acc -= b.coeff(i) * c[k - i];
    c[k] = acc * inv_b0;
  }
  return c[a];
}

Rat residue_infinity(const RationalFunctionQ& f) { return -residue_zero(invert_q(f)); }

RationalFunctionQ euler_class(const std::vector<QExp>& characters, int d) {
  RationalFunctionQ result = RationalFunctionQ::one(d);
  for (const QExp& b : characters) {
    QExp e = QExp::from_rat(b.value(), d);
    const int minus = static_cast<int>(-e.units);
    // 1 - x^{minus}
    std::map<int, Rat> terms{{0, Rat(1)}};
    terms[minus] -= 1;
    result *= RationalFunctionQ::laurent(terms, d);
  }
  return result;
}

long roots_of_unity_power_sum(long d, long m) {
  if (d < 1) throw ValidationError("power sum needs d >= 1");
  return ((m % d) + d) % d == 0 ? d : 0;
}

namespace {

// Numerator of sum_k 1/(1 - zeta^k x) over the common denominator 1 - x^d:
// sum_k f(zeta^k x) with f(y) = 1 + y + ... + y^{d-1}.
PolyX ghost_numerator(int d) {
  std::vector<Rat> c(d);
  for (int m = 0; m < d; ++m) c[m] = Rat(roots_of_unity_power_sum(d, m));
  return PolyX(std::move(c));
}

}  // namespace

bool verify_ghost_identity(int d) {
  if (d < 1) throw ValidationError("ghost identity needs d >= 1");
  const PolyX one_minus = PolyX(1) - PolyX::x_power(d);
  RationalFunctionQ lhs(ghost_numerator(d), one_minus, 1);
  RationalFunctionQ rhs(PolyX(Rat(d)), one_minus, 1);
  if (!(lhs == rhs)) return false;
  // Coefficientwise: [x^m] sum_k 1/(1 - zeta^k x) = sum_k zeta^{km}, and
  // [x^m] d/(1 - x^d) = d when d | m.
  for (int m = 0; m < 3 * d + 1; ++m) {
    long expected = (m % d == 0) ? d : 0;
    if (roots_of_unity_power_sum(d, m) != expected) return false;
  }
  return true;
}

RationalFunctionQ aggregate_node_factor(int d) {
  if (d < 1) throw ValidationError("node factor needs d >= 1");
  // Inverse of ghost_numerator / (1 - x^d), then x^d -> y.
  const PolyX num = PolyX(1) - PolyX::x_power(d);
  const PolyX den = ghost_numerator(d);
  return RationalFunctionQ(num.compress(d), den.compress(d), 1);
}

}  // namespace kwall
