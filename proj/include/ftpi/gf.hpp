#pragma once

#include <vector>

#include "ftpi/arith.hpp"

namespace ftpi {

// GF(p^e) for p^e <= 128. Elements are integer codes sum c_i p^i where c_i is
// the coefficient of x^i in the fixed irreducible-polynomial basis. The
// polynomial per (p,e) is the lexicographically least monic irreducible (in
// the code order of its non-leading coefficient vector); the table lives in
// data/irreducibles.txt and is mirrored here.
class GF {
 public:
  static const GF& get(int q);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return poly_; }  // ascending, degree e

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;
  int pow(int a, long long n) const;
  int frobenius(int a) const { return frob_[a]; }  // x -> x^p
  int primitive_element() const { return primitive_; }

  // multiplicative order of a nonzero element
  int mult_order(int a) const;

 private:
  explicit GF(int p, int e, std::vector<int> poly);
  int p_, e_, q_;
  std::vector<int> poly_;
  std::vector<int> add_, mul_, neg_, inv_, frob_;
  int primitive_;
};

// irreducible polynomial (ascending coefficients, length e+1, monic) for
// (p,e); used by GF::get and verified against the data file in tests
std::vector<int> irreducible_poly(int p, int e);

}  // namespace ftpi
