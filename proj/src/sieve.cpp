#include "ftpi/sieve.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

namespace ftpi {

namespace {

ConstraintVerdict check(const std::string& id, bool ok, const std::string& witness) {
  ConstraintVerdict v;
  v.rule_id = id;
  v.passed = ok;
  if (!ok) v.witness = witness;
  return v;
}

std::string rel(i64 lhs, const char* op, i64 rhs) {
  std::ostringstream os;
  os << lhs << " " << op << " " << rhs << " fails";
  return os.str();
}

std::string ndiv(i64 a, i64 b) {
  std::ostringstream os;
  os << a << " does not divide " << b;
  return os.str();
}

}  // namespace

std::vector<ConstraintVerdict> dembowski_ok(i64 lambda, i64 r, i64 k, i64 v) {
  std::vector<ConstraintVerdict> out;
  i64 glr = gcd(lambda, r);
  out.push_back(check("DEM1", glr >= 2, "gcd(lambda,r)=" + std::to_string(glr) + " < 2"));
  out.push_back(check("DEM2", lambda <= glr * (glr - 1),
                      rel(lambda, "<=", glr * (glr - 1))));
  i64 grk = gcd(r - lambda, k);
  out.push_back(check("DEM3", grk >= 2,
                      "gcd(r-lambda,k)=" + std::to_string(grk) + " < 2"));
  out.push_back(check("DEM4", r <= checked_mul(lambda, k - 3), rel(r, "<=", lambda * (k - 3))));
  i64 gvk = gcd(v - 1, k - 1);
  out.push_back(check("DEM5", gvk >= 3,
                      "gcd(v-1,k-1)=" + std::to_string(gvk) + " < 3"));
  out.push_back(check("ZZ", r <= checked_mul(gcd(r, lambda), k - 3),
                      rel(r, "<=", gcd(r, lambda) * (k - 3))));
  return out;
}

std::vector<ConstraintVerdict> lemma21_ok(const ParameterTuple& t) {
  std::vector<ConstraintVerdict> out;
  bool i1 = checked_mul(t.b, t.k) == checked_mul(t.v, t.r) &&
            checked_mul(t.r, t.k - 1) == checked_mul(t.lambda, t.v - 1);
  out.push_back(check("L2_1_i", i1,
                      "bk=" + std::to_string(t.b * t.k) + " vr=" + std::to_string(t.v * t.r) +
                          " r(k-1)=" + std::to_string(t.r * (t.k - 1)) +
                          " lambda(v-1)=" + std::to_string(t.lambda * (t.v - 1))));
  bool i2 = t.k % t.ell == 0 && 1 < t.ell && t.ell < t.k;
  out.push_back(check("L2_1_ii", i2, "ell=" + std::to_string(t.ell) +
                                         " must divide k=" + std::to_string(t.k) +
                                         " with 1 < ell < k"));
  i64 c2l = checked_mul(checked_mul(t.c, t.c), t.lambda);
  bool i3 = c2l % (t.ell * t.ell) == 0;
  out.push_back(check("L2_1_iii", i3, ndiv(t.ell * t.ell, c2l)));
  i64 x = t.sieve_x();
  bool i4 = x >= 1 && checked_mul(x, t.ell - 1) <= t.lambda - 1;
  out.push_back(check("L2_1_iv", i4,
                      "x=k-1-d(ell-1)=" + std::to_string(x) + " needs 1 <= x and x(ell-1)=" +
                          std::to_string(x * (t.ell - 1)) + " <= lambda-1=" +
                          std::to_string(t.lambda - 1)));
  bool i5 = checked_mul(t.lambda, t.c - 1) == checked_mul(t.r, t.ell - 1);
  out.push_back(check("L2_1_v", i5,
                      "lambda(c-1)=" + std::to_string(t.lambda * (t.c - 1)) +
                          " != r(ell-1)=" + std::to_string(t.r * (t.ell - 1))));
  i64 big = checked_mul(checked_mul(checked_mul(t.lambda, t.ell), (t.ell - 1) * (t.ell - 1)),
                        checked_mul(t.d, t.d - 1));
  bool i6 = big % t.k == 0;
  out.push_back(check("L2_1_vi", i6, ndiv(t.k, big)));
  return out;
}

bool CandidateVerdicts::all_passed() const {
  for (const auto& v : verdicts)
    if (!v.passed) return false;
  return true;
}

std::vector<std::string> CandidateVerdicts::failed_rules() const {
  std::vector<std::string> out;
  for (const auto& v : verdicts)
    if (!v.passed) out.push_back(v.rule_id);
  return out;
}

CandidateVerdicts evaluate_candidate(i64 lambda, i64 v, i64 k, i64 c, i64 d, i64 ell) {
  CandidateVerdicts cv;
  auto& out = cv.verdicts;
  bool structural = lambda >= 2 && c >= 2 && d >= 2 && ell >= 2 && 2 < k && k < v &&
                    v == checked_mul(c, d);
  out.push_back(check("STRUCT", structural,
                      "needs lambda,c,d,ell >= 2, 2 < k < v and v = c*d"));
  if (!structural) return cv;

  i64 kmax = checked_mul(2 * lambda * lambda, lambda - 1);
  out.push_back(check("DPK", k <= kmax, rel(k, "<=", kmax)));

  // r from lambda(c-1) = r(ell-1)
  i64 rnum = checked_mul(lambda, c - 1);
  bool r_ok = rnum % (ell - 1) == 0;
  out.push_back(check("INT_R", r_ok,
                      "r = lambda(c-1)/(ell-1) = " + std::to_string(rnum) + "/" +
                          std::to_string(ell - 1) + " is not an integer"));
  if (!r_ok) return cv;
  i64 r = rnum / (ell - 1);

  i64 bnum = checked_mul(v, r);
  bool b_ok = bnum % k == 0;
  out.push_back(check("INT_B", b_ok,
                      "b = vr/k = " + std::to_string(bnum) + "/" + std::to_string(k) +
                          " is not an integer"));
  if (!b_ok) {
    // the remaining rules are still evaluable on the fractional candidate
    ParameterTuple t{lambda, v, k, r, 0, c, d, ell};
    for (auto& vd : dembowski_ok(lambda, r, k, v)) out.push_back(std::move(vd));
    for (auto& vd : lemma21_ok(t))
      if (vd.rule_id != "L2_1_i") out.push_back(std::move(vd));
    return cv;
  }
  ParameterTuple t{lambda, v, k, r, bnum / k, c, d, ell};
  for (auto& vd : dembowski_ok(lambda, r, k, v)) out.push_back(std::move(vd));
  for (auto& vd : lemma21_ok(t)) out.push_back(std::move(vd));
  if (cv.all_passed()) cv.tuple = t;
  return cv;
}

namespace {

// enumeration cell: all candidates for fixed (lambda, ell)
void enumerate_cell(i64 lambda, i64 ell, i64 v_min, i64 v_max,
                    std::vector<ParameterTuple>& out) {
  i64 kmax = 2 * lambda * lambda * (lambda - 1);
  for (i64 k = 2 * ell; k <= kmax; k += ell) {
    for (i64 x = 1; x * (ell - 1) <= lambda - 1; ++x) {
      if ((k - 1 - x) % (ell - 1) != 0) continue;
      i64 d = (k - 1 - x) / (ell - 1);
      if ((k - ell) % x != 0) continue;
      i64 c = (k - ell) / x;
      if (c < 2 || d < 2) continue;
      i64 v = c * d;
      if (v < v_min || v > v_max) continue;
      auto cv = evaluate_candidate(lambda, v, k, c, d, ell);
      if (cv.tuple) out.push_back(*cv.tuple);
    }
  }
}

}  // namespace

std::vector<ParameterTuple> enumerate_tuples_serial(i64 lambda_min, i64 lambda_max,
                                                    i64 v_min, i64 v_max) {
  if (lambda_min < 2) throw std::invalid_argument("lambda must be at least 2");
  if (lambda_min > lambda_max || v_min < 1 || v_min > v_max)
    throw std::invalid_argument("empty parameter range");
  std::vector<ParameterTuple> out;
  for (i64 lambda = lambda_min; lambda <= lambda_max; ++lambda)
    for (i64 ell = 2; ell <= lambda; ++ell)
      enumerate_cell(lambda, ell, v_min, v_max, out);
  std::sort(out.begin(), out.end(), [](const ParameterTuple& a, const ParameterTuple& b) {
    return std::tie(a.lambda, a.v, a.k, a.c) < std::tie(b.lambda, b.v, b.k, b.c);
  });
  return out;
}

std::vector<ParameterTuple> enumerate_tuples(i64 lambda_min, i64 lambda_max, i64 v_min,
                                             i64 v_max) {
  if (lambda_min < 2) throw std::invalid_argument("lambda must be at least 2");
  if (lambda_min > lambda_max || v_min < 1 || v_min > v_max)
    throw std::invalid_argument("empty parameter range");
  // independent (lambda, ell) cells, deterministic merge
  std::vector<std::pair<i64, i64>> cells;
  for (i64 lambda = lambda_min; lambda <= lambda_max; ++lambda)
    for (i64 ell = 2; ell <= lambda; ++ell) cells.emplace_back(lambda, ell);
  std::vector<std::vector<ParameterTuple>> results(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(cells.size()); ++i)
    enumerate_cell(cells[i].first, cells[i].second, v_min, v_max, results[i]);
  std::vector<ParameterTuple> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  std::sort(out.begin(), out.end(), [](const ParameterTuple& a, const ParameterTuple& b) {
    return std::tie(a.lambda, a.v, a.k, a.c) < std::tie(b.lambda, b.v, b.k, b.c);
  });
  return out;
}

bool prime_exclusion_applies(const ParameterTuple& t, i64 p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  i64 kl = t.k_over_ell();
  return 0 <= t.d - p && t.d - p < kl && kl < p && t.b % p != 0;
}

std::vector<i64> subdesign_feasible_f(const ParameterTuple& t, i64 p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (t.c % p == 0)
    throw std::invalid_argument("hypothesis (b) fails: p divides c");
  if (p <= t.lambda)
    throw std::invalid_argument("hypothesis (c) fails: p <= lambda");
  std::vector<i64> out;
  for (i64 f = t.ell + 1; f < t.c; ++f) {
    if ((t.c - f) % p != 0) continue;
    if (checked_mul(t.lambda, checked_mul(t.d, f) - 1) % (t.k - 1) != 0) continue;
    out.push_back(f);
  }
  return out;
}

DerivedDesignParams derived_design_params(const ParameterTuple& t) {
  DerivedDesignParams p;
  p.inner_v = t.c;
  p.inner_k = t.ell;
  p.inner_lambda = t.lambda;
  p.inner_r = t.lambda * (t.c - 1) / (t.ell - 1);
  i64 ibnum = checked_mul(t.lambda, checked_mul(t.c, t.c - 1));
  i64 ibden = t.ell * (t.ell - 1);
  p.inner_b_integral = ibnum % ibden == 0;
  if (p.inner_b_integral) p.inner_b = ibnum / ibden;

  p.quot_v = t.d;
  p.quot_k = t.k_over_ell();
  p.quot_lambda = checked_mul(t.c, t.c) * t.lambda / (t.ell * t.ell);
  i64 qrnum = checked_mul(p.quot_lambda, t.d - 1);
  p.quot_r_integral = qrnum % (p.quot_k - 1) == 0;
  if (p.quot_r_integral) {
    p.quot_r = qrnum / (p.quot_k - 1);
    i64 qbnum = checked_mul(t.d, p.quot_r);
    p.quot_b_integral = qbnum % p.quot_k == 0;
    if (p.quot_b_integral) p.quot_b = qbnum / p.quot_k;
  }
  return p;
}

}  // namespace ftpi
