#include "kwall/loopspace.hpp"

#include "kwall/errors.hpp"

namespace kwall {

std::vector<BlockPart> partial_fraction_blocks(const RationalFunctionQ& f) {
  if (f.remainder().degree() > 0)
    throw MalformedPoleError("denominator factor outside the cyclotomic dictionary in " +
                             f.to_string());
  std::vector<BlockPart> out;
  for (const auto& [n, m] : f.blocks()) out.push_back({n, m, f.principal_numerator(n)});
  return out;
}

ScalarSplit split_scalar(const RationalFunctionQ& f) {
  RationalFunctionQ minus = RationalFunctionQ::zero(f.d());
  for (const BlockPart& b : partial_fraction_blocks(f))
    minus += RationalFunctionQ::block_term(b.numerator, b.n, b.multiplicity, f.d());
  RationalFunctionQ plus = f - minus;
  if (!plus.is_laurent())
    throw MalformedPoleError("polar part did not split off cleanly from " + f.to_string());
  return {plus, minus};
}

std::vector<PolyX> block_digits(int n, int m, const PolyX& num) {
  // num = sum_i c_i Phi^i; c_i / Phi^{m-i} is the j = m-1-i digit.
  std::vector<PolyX> digits(m);
  PolyX rest = num;
  const PolyX& phi = cyclotomic(n);
  for (int i = 0; i < m; ++i) {
    auto [q, r] = PolyX::divmod(rest, phi);
    digits[m - 1 - i] = r;
    rest = q;
  }
  if (!rest.is_zero()) throw ValidationError("block numerator degree too large");
  return digits;
}

RationalFunctionQ from_block_digits(int n, const std::vector<PolyX>& digits, int d) {
  RationalFunctionQ acc = RationalFunctionQ::zero(d);
  for (std::size_t j = 0; j < digits.size(); ++j)
    acc += RationalFunctionQ::block_term(digits[j], n, static_cast<int>(j) + 1, d);
  return acc;
}

void validate_kelement(const FermatModel& model, const KElement& f) {
  require_narrow(model, f);
  for (const auto& [k, v] : f)
    if (v.remainder().degree() > 0)
      throw MalformedPoleError("component " + std::to_string(k) +
                               " has a pole away from 0, roots of unity and infinity");
}

KElement invert_q(const KElement& f) {
  return f.map([](const RationalFunctionQ& v) { return invert_q(v); });
}

KDecomposition decompose(const KElement& f) {
  KDecomposition out;
  for (const auto& [k, v] : f) {
    ScalarSplit s = split_scalar(v);
    out.plus.set(k, std::move(s.plus));
    out.minus.set(k, std::move(s.minus));
  }
  return out;
}

Rat omega(const FermatModel& model, const KElement& f, const KElement& g) {
  RationalFunctionQ h =
      pair_vectors(model, invert_q(f), g, RationalFunctionQ::zero(model.d()));
  return -(residue_zero(h) + residue_infinity(h));
}

}  // namespace kwall
