#pragma once

#include <cstdint>
#include <vector>

namespace hassett::arith {

struct PrimeFactor {
  std::int64_t prime = 0;
  int exponent = 0;

  bool operator==(const PrimeFactor&) const = default;
};

// Unique factorization of a positive integer. factors are sorted by prime,
// the empty list represents 1.
struct PrimeFactorization {
  std::int64_t value = 1;
  std::vector<PrimeFactor> factors;

  bool operator==(const PrimeFactorization&) const = default;
};

// Deterministic primality for the full int64 range. Negative inputs, 0 and 1
// are composite-by-convention (false).
bool is_prime(std::int64_t n);

// Exact factorization; throws invalid_input for n < 1.
PrimeFactorization factorize(std::int64_t n);

// All positive divisors of n, ascending; throws invalid_input for n < 1.
std::vector<std::int64_t> divisors(std::int64_t n);

// floor(sqrt(n)), exact; throws invalid_input for n < 0.
std::int64_t isqrt(std::int64_t n);

// True iff n is a perfect square (n >= 0).
bool is_square(std::int64_t n);

}  // namespace hassett::arith
