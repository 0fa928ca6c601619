#include "ftpi/arith.hpp"

#include <algorithm>

namespace ftpi {

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw arithmetic_overflow("integer overflow in multiplication");
  return r;
}

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw arithmetic_overflow("integer overflow in addition");
  return r;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (i64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<i64> primes_up_to(i64 n) {
  std::vector<i64> out;
  if (n < 2) return out;
  std::vector<char> sieve(static_cast<size_t>(n) + 1, 1);
  for (i64 i = 2; i <= n; ++i) {
    if (!sieve[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    for (i64 j = i * i; j <= n; j += i) sieve[static_cast<size_t>(j)] = 0;
  }
  return out;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  std::vector<std::pair<i64, int>> f;
  for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    f.emplace_back(p, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> ds{1};
  for (auto [p, e] : factorize(n)) {
    size_t m = ds.size();
    i64 pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < m; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

i64 binomial_clamped(i64 n, i64 k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  i64 r = 1;
  for (i64 i = 1; i <= k; ++i) {
    // r * (n-k+i) / i is exact at every step
    i64 num = n - k + i;
    i64 g = gcd(r, i);
    i64 ri = r / g, ig = i / g;
    g = gcd(num, ig);
    num /= g;
    ig /= g;
    if (ig != 1) throw arithmetic_overflow("binomial internal");
    if (ri > kBinomialHuge / num) return kBinomialHuge;
    r = ri * num;
    if (r >= kBinomialHuge) return kBinomialHuge;
  }
  return r;
}

std::string format_factored(i64 n) {
  if (n <= 1) return std::to_string(n);
  std::string s;
  for (auto [p, e] : factorize(n)) {
    if (!s.empty()) s += "*";
    s += std::to_string(p);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace ftpi
