#include "kwall/rational.hpp"

#include <cctype>

#include "kwall/errors.hpp"

namespace kwall {

Rat make_rat(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int ceil_rat(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rat frac(const Rat& x) { return x - Rat(floor_rat(x)); }

bool is_integer(const Rat& x) { return x.get_den() == 1; }

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool is_int_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

Int parse_int(std::string_view s) {
  std::string owned(s[0] == '+' ? s.substr(1) : s);
  return Int(owned, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int_token(s))
      throw ParseError("not a rational: '" + std::string(text) + "'");
    return Rat(parse_int(s));
  }
  auto num = trim(s.substr(0, slash));
  auto den = trim(s.substr(slash + 1));
  if (!is_int_token(num) || !is_int_token(den) || den[0] == '-')
    throw ParseError("not a rational: '" + std::string(text) + "'");
  Int dz = parse_int(den);
  if (dz == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rat r(parse_int(num), dz);
  r.canonicalize();
  return r;
}

long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw ValidationError("integer out of machine range");
  return z.get_si();
}

QExp QExp::from_rat(const Rat& value, int d) {
  Rat scaled = value * d;
  if (!is_integer(scaled))
    throw ValidationError("exponent " + to_string(value) +
                          " is not a multiple of 1/" + std::to_string(d));
  return QExp{to_long(scaled.get_num()), d};
}

}  // namespace kwall
