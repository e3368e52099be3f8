#pragma once

// Exact rationals over GMP plus the small helpers the rest of the library
// needs (fractional part, exact ceilings, canonical string form).

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace kwall {

/// Arbitrary-precision rational number, always kept in canonical form
/// (reduced, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(long num, long den = 1);

/// Fractional part in [0, 1). Negative inputs wrap: frac(-1/3) = 2/3.
Rat frac(const Rat& x);

/// Largest integer <= x.
Int floor_rat(const Rat& x);
/// Smallest integer >= x.
Int ceil_rat(const Rat& x);

bool is_integer(const Rat& x);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rat& x);

/// Inverse of to_string. Accepts "p", "p/q" and surrounding whitespace;
/// throws ParseError on anything else or on a zero denominator.
Rat parse_rat(std::string_view text);

long to_long(const Int& z);

/// Exponent of q stored as an integer count of 1/d units.
struct QExp {
  long units = 0;
  int d = 1;

  static QExp from_rat(const Rat& value, int d);
  Rat value() const { return make_rat(units, d); }

  friend bool operator==(const QExp&, const QExp&) = default;
};

}  // namespace kwall
