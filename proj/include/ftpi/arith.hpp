#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ftpi {

using i64 = std::int64_t;

// All sieve arithmetic is exact 64-bit with overflow checks; an overflow is a
// logic error, not a value.
struct arithmetic_overflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

i64 checked_mul(i64 a, i64 b);
i64 checked_add(i64 a, i64 b);

inline i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

bool is_prime(i64 n);
std::vector<i64> primes_up_to(i64 n);
std::vector<i64> divisors(i64 n);
std::vector<std::pair<i64, int>> factorize(i64 n);

// binomial(n,k), saturating at a sentinel larger than any divisor bound we
// compare against instead of overflowing.
inline constexpr i64 kBinomialHuge = INT64_MAX / 2;
i64 binomial_clamped(i64 n, i64 k);

std::string format_factored(i64 n);

}  // namespace ftpi
