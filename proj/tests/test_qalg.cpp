#include <doctest.h>

#include "kwall/errors.hpp"
#include "kwall/ratfunc.hpp"
#include "support.hpp"

using namespace kwall;
using kwall::testing::one_minus_q;
using kwall::testing::rf;

namespace {

int mobius(long n) {
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Phi_n = prod_{e | n} (x^{n/e} - 1)^{mu(e)}.
PolyX mobius_cyclotomic(int n) {
  PolyX top(1), bottom(1);
  for (long e : divisors(n)) {
    PolyX factor = PolyX::x_power(static_cast<int>(n / e)) - PolyX(1);
    int mu = mobius(e);
    if (mu == 1) top *= factor;
    if (mu == -1) bottom *= factor;
  }
  PolyX quo;
  REQUIRE(PolyX::divides(bottom, top, &quo));
  return quo;
}

}  // namespace

TEST_CASE("frac removes the integer part and wraps negatives") {
  CHECK(frac(make_rat(7, 5)) == make_rat(2, 5));
  CHECK(frac(make_rat(-1, 3)) == make_rat(2, 3));
  CHECK(frac(Rat(3)) == 0);
}

TEST_CASE("rational strings round-trip") {
  CHECK(to_string(make_rat(-6, 4)) == "-3/2");
  CHECK(to_string(Rat(7)) == "7");
  CHECK(parse_rat(" -3/2 ") == make_rat(-3, 2));
  CHECK(parse_rat("12") == 12);
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("abc"), ParseError);
}

TEST_CASE("cyclotomic polynomials match the Mobius product") {
  CHECK(cyclotomic(1) == PolyX{-1, 1});
  CHECK(cyclotomic(4) == PolyX{1, 0, 1});
  CHECK(cyclotomic(6) == PolyX{1, -1, 1});
  for (int n = 1; n <= 40; ++n) CHECK(cyclotomic(n) == mobius_cyclotomic(n));
}

TEST_CASE("product of Phi_m over m | n is x^n - 1 for n <= 30") {
  for (int n = 1; n <= 30; ++n) {
    PolyX acc(1);
    for (long m : divisors(n)) acc *= cyclotomic(static_cast<int>(m));
    CHECK(acc == PolyX::x_power(n) - PolyX(1));
  }
}

TEST_CASE("denominator factorization finds every cyclotomic block") {
  PolyX den = PolyX::x_power(3) * cyclotomic(5).pow(2) * cyclotomic(12) * PolyX{-2, 1};
  Factorization f = factor_denominator(den * Rat(7));
  CHECK(f.scalar == 7);
  CHECK(f.x_order == 3);
  CHECK(f.blocks == std::map<int, int>{{5, 2}, {12, 1}});
  CHECK(f.remainder == PolyX{-2, 1});
}

TEST_CASE("arith examples") {
  const int d5 = 5;
  auto geometric = rf({1}, {1, -1}, 1);
  CHECK(arith(geometric, RationalFunctionQ(Rat(-1), 1), "add") == rf({0, 1}, {1, -1}, 1));

  auto a = one_minus_q(2, d5);
  auto b = RationalFunctionQ::laurent({{0, Rat(1)}, {2, Rat(1)}}, d5);
  CHECK(arith(a, b, "mul") == one_minus_q(4, d5));

  auto num = one_minus_q(2, 2);  // 1 - q with d = 2
  auto den = one_minus_q(1, 2);  // 1 - q^{1/2}
  CHECK(arith(num, den, "div") == RationalFunctionQ::laurent({{0, Rat(1)}, {1, Rat(1)}}, 2));

  CHECK_THROWS_AS(arith(a, RationalFunctionQ::zero(d5), "div"), DivisionByZero);
  CHECK_THROWS_AS(arith(a, b, "pow"), ValidationError);
}

TEST_CASE("arith satisfies field axioms on random samples") {
  kwall::testing::Random rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = rng.uniform(1, 4);
    auto f = rng.rational(d, 8, true);
    auto g = rng.rational(d, 8, true);
    auto h = rng.nonzero_rational(d, 8, true);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f + g == g + f);
    CHECK((f * h) / h == f);
    CHECK(f - f == RationalFunctionQ::zero(d));
  }
}

TEST_CASE("mixed exponent denominators are lifted to a common d") {
  auto half = RationalFunctionQ::q_power(make_rat(1, 2), 2);
  auto third = RationalFunctionQ::q_power(make_rat(1, 3), 3);
  auto prod = half * third;
  CHECK(prod.d() == 6);
  CHECK(prod == RationalFunctionQ::q_power(make_rat(5, 6), 6));
  CHECK(RationalFunctionQ::q_power(Rat(1), 1) == RationalFunctionQ::q_power(Rat(1), 4));
}

TEST_CASE("invert_q examples") {
  // 1 - q -> (q - 1)/q
  CHECK(invert_q(one_minus_q(1, 1)) == rf({-1, 1}, {0, 1}, 1));
  // q^{1/d} -> 1/x
  CHECK(invert_q(RationalFunctionQ::q_power(make_rat(1, 5), 5)) == rf({1}, {0, 1}, 5));
  // 1/(1 - q) -> q/(q - 1)
  CHECK(invert_q(rf({1}, {1, -1}, 1)) == rf({0, 1}, {-1, 1}, 1));
}

TEST_CASE("invert_q is an involution and agrees with direct substitution") {
  kwall::testing::Random rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const int d = rng.uniform(1, 5);
    auto f = rng.rational(d, 12, true);
    CHECK(invert_q(invert_q(f)) == f);
    // Compare values at x = 3 and x = 1/3.
    Rat x = 3;
    bool defined = true;
    Rat lhs, rhs;
    try {
      lhs = invert_q(f).eval(x);
      rhs = f.eval(1 / x);
    } catch (const DivisionByZero&) {
      defined = false;
    }
    if (defined) CHECK(lhs == rhs);
  }
}

TEST_CASE("pole_orders examples") {
  auto geometric = rf({1}, {1, -1}, 1);
  PoleReport r = pole_orders(geometric);
  CHECK(r.at_zero == 0);
  CHECK(r.at_infinity == 0);
  REQUIRE(r.blocks.size() == 1);
  CHECK(r.blocks[0] == PoleReport::Block{1, 1, 1});

  // Same function written over x = q^{1/5}: 1 - x^5 = -Phi_1 Phi_5.
  PoleReport r5 = pole_orders(RationalFunctionQ::one(5) / one_minus_q(5, 5));
  REQUIRE(r5.blocks.size() == 2);
  CHECK(r5.blocks[0] == PoleReport::Block{1, 1, 1});
  CHECK(r5.blocks[1] == PoleReport::Block{5, 1, 1});

  PoleReport sq = pole_orders(RationalFunctionQ::q_power(2, 1));
  CHECK(sq.at_infinity == 2);
  CHECK(sq.at_zero == 0);
  CHECK(sq.blocks.empty());

  // 1/(q (1 - q)^2)
  auto f = RationalFunctionQ::one(1) / (RationalFunctionQ::q_power(1, 1) * one_minus_q(1, 1).pow(2));
  PoleReport fr = pole_orders(f);
  CHECK(fr.at_zero == 1);
  REQUIRE(fr.blocks.size() == 1);
  CHECK(fr.blocks[0].order == 2);

  CHECK(pole_orders(rf({1}, {-2, 1}, 1)).remainder_degree == 1);
}

TEST_CASE("pole orders of a product are bounded by the sum") {
  kwall::testing::Random rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    auto f = rng.nonzero_rational(1, 10);
    auto g = rng.nonzero_rational(1, 10);
    auto order = [](const RationalFunctionQ& h, int n) {
      auto it = h.blocks().find(n);
      return it == h.blocks().end() ? 0 : it->second;
    };
    auto fg = f * g;
    for (int n = 1; n <= 10; ++n) {
      CHECK(order(fg, n) <= order(f, n) + order(g, n));
      bool coprime = !may_divide_cyclotomic(n, f.numerator()) &&
                     !may_divide_cyclotomic(n, g.numerator());
      if (coprime) CHECK(order(fg, n) == order(f, n) + order(g, n));
    }
  }
}

TEST_CASE("residue examples") {
  auto c = RationalFunctionQ(Rat(7), 1);
  CHECK(residue_zero(c) == 7);
  CHECK(residue_infinity(c) == -7);
  auto q = RationalFunctionQ::q_power(1, 1);
  CHECK(residue_zero(q) == 0);
  CHECK(residue_infinity(q) == 0);
  auto geometric = rf({1}, {1, -1}, 1);
  CHECK(residue_zero(geometric) == 1);
  CHECK(residue_infinity(geometric) == 0);
}

TEST_CASE("residues agree with the Laurent-expansion oracle") {
  kwall::testing::Random rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = rng.rational(rng.uniform(1, 4), 12, true);
    CHECK(residue_zero(f) == kwall::testing::oracle_residue_zero(f));
    CHECK(residue_infinity(f) == kwall::testing::oracle_residue_infinity(f));
  }
}

TEST_CASE("residues at 0 and infinity cancel for Laurent polynomials") {
  kwall::testing::Random rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    std::map<int, Rat> terms;
    for (int i = 0; i < 5; ++i) terms[rng.uniform(-6, 6)] += rng.small_rat();
    auto f = RationalFunctionQ::laurent(terms, rng.uniform(1, 5));
    CHECK(residue_zero(f) + residue_infinity(f) == 0);
  }
}

TEST_CASE("euler_class examples and multiplicativity") {
  CHECK(euler_class({}, 5) == RationalFunctionQ::one(5));
  CHECK(euler_class({QExp{-2, 5}}, 5) == one_minus_q(2, 5));
  CHECK(euler_class({QExp{-2, 5}, QExp{-2, 5}}, 5) == one_minus_q(2, 5).pow(2));
  // Non-dual character: 1 - q^{-1/5}.
  CHECK(euler_class({QExp{1, 5}}, 5) == RationalFunctionQ::laurent({{0, Rat(1)}, {-1, Rat(-1)}}, 5));

  kwall::testing::Random rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<QExp> a, b;
    for (int i = rng.uniform(0, 3); i > 0; --i) a.push_back({rng.uniform(-6, 6), 3});
    for (int i = rng.uniform(0, 3); i > 0; --i) b.push_back({rng.uniform(-6, 6), 3});
    std::vector<QExp> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(euler_class(ab, 3) == euler_class(a, 3) * euler_class(b, 3));
  }
}

TEST_CASE("roots of unity power sums") {
  CHECK(roots_of_unity_power_sum(5, 0) == 5);
  CHECK(roots_of_unity_power_sum(5, 3) == 0);
  CHECK(roots_of_unity_power_sum(6, 12) == 6);
  CHECK(roots_of_unity_power_sum(6, -6) == 6);
}

TEST_CASE("ghost identity holds for d <= 24") {
  for (int d = 1; d <= 24; ++d) CHECK(verify_ghost_identity(d));
}

TEST_CASE("aggregated node factor is (1 - y)/d") {
  CHECK(aggregate_node_factor(1) == one_minus_q(1, 1));
  for (int d = 1; d <= 12; ++d)
    CHECK(aggregate_node_factor(d) == one_minus_q(1, 1) * make_rat(1, d));
}

TEST_CASE("text rendering") {
  CHECK(one_minus_q(2, 5).to_string() == "1 - q^(2/5)");
  CHECK(RationalFunctionQ::zero(3).to_string() == "0");
}
