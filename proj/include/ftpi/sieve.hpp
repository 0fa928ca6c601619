#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftpi/arith.hpp"

namespace ftpi {

// The eight parameters of a candidate flag-transitive point-imprimitive
// design, r and b stored explicitly so near-misses can be reported with a
// witness.
struct ParameterTuple {
  i64 lambda = 0, v = 0, k = 0, r = 0, b = 0, c = 0, d = 0, ell = 0;

  i64 sieve_x() const { return k - 1 - d * (ell - 1); }
  i64 k_over_ell() const { return k / ell; }

  bool operator==(const ParameterTuple&) const = default;
  auto operator<=>(const ParameterTuple&) const = default;
};

struct ConstraintVerdict {
  std::string rule_id;
  bool passed = true;
  std::string witness;  // non-empty on failure: the violated relation, evaluated
};

// Dembowski's five conditions plus the Zhao-Zhou strengthening
// (DEM1..DEM5, ZZ), on (lambda, r, k, v).
std::vector<ConstraintVerdict> dembowski_ok(i64 lambda, i64 r, i64 k, i64 v);

// parts (i)-(vi) of the parameter lemma (L2_1_i..L2_1_vi)
std::vector<ConstraintVerdict> lemma21_ok(const ParameterTuple& t);

// Full verdict list for a candidate given by (lambda, v, k, c, d, ell):
// structural conditions, derived-integrality INT_R / INT_B, the k-bound DPK,
// Dembowski and the lemma. r and b are derived where integral.
struct CandidateVerdicts {
  std::optional<ParameterTuple> tuple;  // set when INT_R and INT_B pass
  std::vector<ConstraintVerdict> verdicts;
  bool all_passed() const;
  std::vector<std::string> failed_rules() const;
};
CandidateVerdicts evaluate_candidate(i64 lambda, i64 v, i64 k, i64 c, i64 d, i64 ell);

// every feasible tuple with lambda and v in range, sorted by (lambda,v,k,c);
// parametrized over (ell, lambda, k, sieve_x) with c, d derived
std::vector<ParameterTuple> enumerate_tuples(i64 lambda_min, i64 lambda_max, i64 v_min,
                                             i64 v_max);
// single-threaded reference implementation kept for testing the parallel cell
// split
std::vector<ParameterTuple> enumerate_tuples_serial(i64 lambda_min, i64 lambda_max,
                                                    i64 v_min, i64 v_max);

// Proposition-level arithmetic used by the elimination rules:
// prime exclusion hypotheses 0 <= d-p < k/ell < p and p not dividing b
bool prime_exclusion_applies(const ParameterTuple& t, i64 p);

// feasible fixed-point counts f for the complete-subdesign restriction;
// empty means the hypotheses are jointly contradictory
std::vector<i64> subdesign_feasible_f(const ParameterTuple& t, i64 p);

struct DerivedDesignParams {
  // inner 2-(c, ell, lambda) and quotient 2-(d, k/ell, c^2 lambda / ell^2)
  i64 inner_v = 0, inner_k = 0, inner_lambda = 0, inner_r = 0;
  bool inner_b_integral = false;
  i64 inner_b = 0;
  i64 quot_v = 0, quot_k = 0, quot_lambda = 0;
  bool quot_r_integral = false, quot_b_integral = false;
  i64 quot_r = 0, quot_b = 0;
};
DerivedDesignParams derived_design_params(const ParameterTuple& t);

}  // namespace ftpi
