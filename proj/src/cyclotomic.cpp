#include "kwall/cyclotomic.hpp"

#include <cstdint>
#include <mutex>
#include <numeric>

#include "kwall/errors.hpp"

namespace kwall {

long euler_phi(long n) {
  if (n < 1) throw ValidationError("euler_phi of nonpositive integer");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long> divisors(long n) {
  if (n < 1) throw ValidationError("divisors of nonpositive integer");
  std::vector<long> small, large;
  for (long k = 1; k * k <= n; ++k) {
    if (n % k) continue;
    small.push_back(k);
    if (k != n / k) large.push_back(n / k);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, PolyX>& cyclotomic_cache() {
  static std::map<int, PolyX> cache;
  return cache;
}

PolyX compute_cyclotomic(int n) {
  // x^n - 1 divided by every Phi_m with m | n, m < n.
  PolyX acc = PolyX::x_power(n) - PolyX(1);
  for (long m : divisors(n)) {
    if (m == n) break;
    acc = PolyX::divmod(acc, cyclotomic(static_cast<int>(m))).first;
  }
  return acc;
}

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 dm = n - 1;
  int s = 0;
  while ((dm & 1) == 0) {
    dm >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, dm, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct RootData {
  u64 prime;
  u64 root;  // primitive n-th root of unity mod prime
};

RootData find_root(int n) {
  const u64 start = (u64{1} << 40) / static_cast<u64>(n) + 1;
  for (u64 k = start;; ++k) {
    u64 p = k * static_cast<u64>(n) + 1;
    if (!is_prime_u64(p)) continue;
    auto factors = prime_factors(static_cast<u64>(n));
    for (u64 g = 2; g < p; ++g) {
      u64 w = powmod(g, (p - 1) / n, p);
      bool primitive = true;
      for (u64 l : factors)
        if (powmod(w, n / l, p) == 1) primitive = false;
      if (primitive) return {p, w};
    }
  }
}

const RootData& root_data(int n) {
  static std::mutex m;
  static std::map<int, RootData> cache;
  std::lock_guard lock(m);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, find_root(n)).first;
  return it->second;
}

}  // namespace

const PolyX& cyclotomic(int n) {
  if (n < 1) throw ValidationError("cyclotomic order must be positive");
  {
    std::lock_guard lock(cache_mutex());
    auto it = cyclotomic_cache().find(n);
    if (it != cyclotomic_cache().end()) return it->second;
  }
  PolyX value = compute_cyclotomic(n);
  std::lock_guard lock(cache_mutex());
  return cyclotomic_cache().emplace(n, std::move(value)).first->second;
}

const std::vector<int>& cyclotomic_orders_up_to_degree(int degree) {
  static std::mutex m;
  static std::map<int, std::vector<int>> cache;
  static std::vector<long> phi_sieve{0};
  std::lock_guard lock(m);
  auto it = cache.find(degree);
  if (it != cache.end()) return it->second;
  // euler_phi(n) >= sqrt(n / 2), so n <= 2 degree^2 bounds the search.
  const long bound = std::max<long>(2, 2L * degree * degree);
  if (static_cast<long>(phi_sieve.size()) <= bound) {
    phi_sieve.resize(bound + 1);
    std::iota(phi_sieve.begin(), phi_sieve.end(), 0L);
    for (long p = 2; p <= bound; ++p) {
      if (phi_sieve[p] != p) continue;
      for (long k = p; k <= bound; k += p) phi_sieve[k] -= phi_sieve[k] / p;
    }
  }
  std::vector<int> orders;
  for (long n = 1; n <= bound; ++n)
    if (phi_sieve[n] <= degree) orders.push_back(static_cast<int>(n));
  return cache.emplace(degree, std::move(orders)).first->second;
}

bool may_divide_cyclotomic(int n, const PolyX& p) {
  if (p.is_zero()) return true;
  if (p.degree() < euler_phi(n)) return false;
  const RootData& rd = root_data(n);
  u64 acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    u64 den = mpz_fdiv_ui(it->get_den_mpz_t(), rd.prime);
    if (den == 0) return true;  // cannot decide modulo this prime
    u64 num = mpz_fdiv_ui(it->get_num_mpz_t(), rd.prime);
    u64 term = mulmod(num, powmod(den, rd.prime - 2, rd.prime), rd.prime);
    acc = (mulmod(acc, rd.root, rd.prime) + term) % rd.prime;
  }
  return acc == 0;
}

int strip_cyclotomic(int n, PolyX& p) {
  int count = 0;
  const PolyX& phi = cyclotomic(n);
  while (!p.is_zero() && may_divide_cyclotomic(n, p)) {
    PolyX quo;
    if (!PolyX::divides(phi, p, &quo)) break;
    p = std::move(quo);
    ++count;
  }
  return count;
}

Factorization factor_denominator(const PolyX& p) {
  if (p.is_zero()) throw DivisionByZero("zero denominator");
  Factorization f;
  f.x_order = p.valuation();
  PolyX rest = p.shift(-f.x_order);
  f.scalar = rest.lead();
  rest = rest.monic();
  if (rest.degree() > 0) {
    for (int n : cyclotomic_orders_up_to_degree(rest.degree())) {
      if (rest.degree() == 0) break;
      if (euler_phi(n) > rest.degree()) continue;
      int m = strip_cyclotomic(n, rest);
      if (m > 0) f.blocks[n] = m;
    }
  }
  f.remainder = rest;
  return f;
}

}  // namespace kwall
