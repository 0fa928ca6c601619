#include "ftpi/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace ftpi {

namespace {

// non-leading coefficients a_0..a_{e-1} of the lexicographically least monic
// irreducible of degree e over GF(p), encoded as sum a_i p^i
const std::map<std::pair<int, int>, int> kIrreducibleCode = {
    {{2, 2}, 3},  {{2, 3}, 3},  {{2, 4}, 3},  {{2, 5}, 5},  {{2, 6}, 3},
    {{2, 7}, 3},  {{3, 2}, 1},  {{3, 3}, 7},  {{3, 4}, 5},  {{5, 2}, 2},
    {{5, 3}, 6},  {{7, 2}, 1},  {{11, 2}, 1},
};

std::vector<int> poly_from_code(int p, int e, int code) {
  std::vector<int> poly(e + 1, 0);
  for (int i = 0; i < e; ++i) {
    poly[i] = code % p;
    code /= p;
  }
  poly[e] = 1;
  return poly;
}

std::mutex gf_mutex;
std::map<int, std::unique_ptr<GF>> gf_cache;

}  // namespace

std::vector<int> irreducible_poly(int p, int e) {
  auto it = kIrreducibleCode.find({p, e});
  if (it == kIrreducibleCode.end())
    throw std::invalid_argument("no irreducible polynomial on record for p=" +
                                std::to_string(p) + " e=" + std::to_string(e));
  return poly_from_code(p, e, it->second);
}

const GF& GF::get(int q) {
  std::lock_guard<std::mutex> lock(gf_mutex);
  auto it = gf_cache.find(q);
  if (it != gf_cache.end()) return *it->second;
  if (q < 2 || q > 128) throw std::invalid_argument("unsupported field size " + std::to_string(q));
  auto f = factorize(q);
  if (f.size() != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  int p = static_cast<int>(f[0].first), e = f[0].second;
  std::vector<int> poly =
      e == 1 ? std::vector<int>{0, 1} : irreducible_poly(p, e);
  auto gf = std::unique_ptr<GF>(new GF(p, e, std::move(poly)));
  auto& ref = *gf;
  gf_cache.emplace(q, std::move(gf));
  return ref;
}

GF::GF(int p, int e, std::vector<int> poly) : p_(p), e_(e), poly_(std::move(poly)) {
  q_ = 1;
  for (int i = 0; i < e_; ++i) q_ *= p_;

  auto digits = [&](int code) {
    std::vector<int> d(e_);
    for (int i = 0; i < e_; ++i) { d[i] = code % p_; code /= p_; }
    return d;
  };
  auto code_of = [&](const std::vector<int>& d) {
    int c = 0;
    for (int i = e_ - 1; i >= 0; --i) c = c * p_ + d[i];
    return c;
  };

  add_.resize(q_ * q_);
  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    auto da = digits(a);
    std::vector<int> dn(e_);
    for (int i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = code_of(dn);
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b);
      std::vector<int> dc(e_);
      for (int i = 0; i < e_; ++i) dc[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = code_of(dc);
    }
  }

  mul_.resize(q_ * q_);
  for (int a = 0; a < q_; ++a) {
    auto da = digits(a);
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b);
      // polynomial product, then reduce by the modulus
      std::vector<int> prod(2 * e_ - 1, 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int d = 2 * e_ - 2; d >= e_; --d) {
        int c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (int i = 0; i < e_; ++i)
          prod[d - e_ + i] = (prod[d - e_ + i] + c * (p_ - poly_[i])) % p_;
      }
      prod.resize(e_);
      mul_[a * q_ + b] = code_of(prod);
    }
  }

  inv_.assign(q_, 0);
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) { inv_[a] = b; break; }

  frob_.resize(q_);
  for (int a = 0; a < q_; ++a) frob_[a] = pow(a, p_);

  primitive_ = 0;
  for (int a = 1; a < q_; ++a)
    if (mult_order(a) == q_ - 1) { primitive_ = a; break; }
}

int GF::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero field element");
  return inv_[a];
}

int GF::pow(int a, long long n) const {
  if (n < 0) { a = inv(a); n = -n; }
  int r = 1;
  long long m = n;
  int b = a;
  while (m > 0) {
    if (m & 1) r = mul(r, b);
    m >>= 1;
    if (m) b = mul(b, b);
  }
  return r;
}

int GF::mult_order(int a) const {
  if (a == 0) throw std::domain_error("order of zero field element");
  int o = 1, x = a;
  while (x != 1) { x = mul(x, a); ++o; }
  return o;
}

}  // namespace ftpi
