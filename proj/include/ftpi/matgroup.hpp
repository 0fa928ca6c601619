#pragma once

#include <string>
#include <vector>

#include "ftpi/gf.hpp"
#include "ftpi/group.hpp"

namespace ftpi {

// n x n matrix over GF(q), row-major element codes; vectors act on the right
// (v -> v*M).
struct Mat {
  int q = 2;
  int n = 0;
  std::vector<int> a;  // n*n codes

  int& at(int r, int c) { return a[r * n + c]; }
  int at(int r, int c) const { return a[r * n + c]; }
  static Mat identity(int q, int n);
};

Mat mat_mul(const Mat& x, const Mat& y);
std::vector<int> vec_mat(const std::vector<int>& v, const Mat& m);
bool mat_invertible(const Mat& m);
Mat mat_inverse(const Mat& m);

enum class MatSpace {
  Projective,        // points of PG(n-1, q)
  Affine,            // vectors of GF(q)^n, matrices plus listed translations
  UnitaryIsotropic,  // isotropic projective points of the identity Hermitian form
  SymplecticMinusForms,  // minus-type quadratic forms polarizing to the
                         // standard symplectic form (q = 2, n even)
};

// The ordered point list of a space (each point as a vector of codes, or the
// linear-part vector "a" for SymplecticMinusForms).
std::vector<std::vector<int>> space_points(MatSpace space, int q, int n);

// Permutation image of generator matrices on the chosen space. For Affine,
// translations by the standard basis vectors are appended as generators.
PermGroup matrix_action(const std::vector<Mat>& gens, MatSpace space,
                        long long max_degree = 100000, bool add_translations = false);

// normalize a projective representative: first nonzero coordinate becomes 1
std::vector<int> normalize_projective(const GF& f, std::vector<int> v);

}  // namespace ftpi
