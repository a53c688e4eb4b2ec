#include "hassett/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hassett/errors.hpp"

namespace hassett::arith {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// One Miller-Rabin round; n odd, n > 2, witness a reduced mod n.
bool miller_rabin(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

std::int64_t pollard_rho(std::int64_t n) {
  // Brent's cycle detection with gcd batching and backtracking; n odd
  // composite. Retries with a new polynomial when a round degenerates.
  u64 un = static_cast<u64>(n);
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 v) { return (mul_mod(v, v, un) + c) % un; };
    u64 x = 2, y = 2, ys = 2, q = 1, g = 1;
    const u64 batch = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        u64 limit = std::min(batch, r - k);
        for (u64 i = 0; i < limit; ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, un);
        }
        g = std::gcd(q, un);
      }
    }
    if (g == un) {
      // batch overshot a factor; redo the last block one step at a time
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, un);
      } while (g == 1);
    }
    if (g != un) return static_cast<std::int64_t>(g);
  }
}

void factor_into(std::int64_t n, std::vector<std::int64_t>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) {
      primes.push_back(p);
      factor_into(n / p, primes);
      return;
    }
  }
  std::int64_t d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // Deterministic for n < 3.3e24 with these twelve bases.
  u64 un = static_cast<u64>(n);
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (!miller_rabin(un, a)) return false;
  }
  return true;
}

PrimeFactorization factorize(std::int64_t n) {
  if (n < 1) throw invalid_input("factorize requires n >= 1, got " + std::to_string(n));
  PrimeFactorization result;
  result.value = n;
  std::vector<std::int64_t> primes;
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  for (std::int64_t p : primes) {
    if (!result.factors.empty() && result.factors.back().prime == p) {
      ++result.factors.back().exponent;
    } else {
      result.factors.push_back({p, 1});
    }
  }
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw invalid_input("divisors requires n >= 1, got " + std::to_string(n));
  auto fact = factorize(n);
  std::vector<std::int64_t> divs{1};
  for (const auto& [p, e] : fact.factors) {
    std::size_t count = divs.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw invalid_input("isqrt requires n >= 0");
  if (n == 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

bool is_square(std::int64_t n) {
  if (n < 0) return false;
  std::int64_t r = isqrt(n);
  return r * r == n;
}

}  // namespace hassett::arith
