#include "ftpi/matgroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ftpi {

Mat Mat::identity(int q, int n) {
  Mat m{q, n, std::vector<int>(n * n, 0)};
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  if (x.q != y.q || x.n != y.n) throw std::invalid_argument("matrix shape mismatch");
  const GF& f = GF::get(x.q);
  Mat r{x.q, x.n, std::vector<int>(x.n * x.n, 0)};
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      int v = x.at(i, k);
      if (!v) continue;
      for (int j = 0; j < x.n; ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(v, y.at(k, j)));
    }
  return r;
}

std::vector<int> vec_mat(const std::vector<int>& v, const Mat& m) {
  const GF& f = GF::get(m.q);
  std::vector<int> r(m.n, 0);
  for (int i = 0; i < m.n; ++i) {
    if (!v[i]) continue;
    for (int j = 0; j < m.n; ++j) r[j] = f.add(r[j], f.mul(v[i], m.at(i, j)));
  }
  return r;
}

namespace {

// Gauss-Jordan; returns rank, transforms work in place, applies the same row
// ops to rhs when given
int gauss(Mat& work, Mat* rhs) {
  const GF& f = GF::get(work.q);
  int n = work.n, rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (work.at(r, col)) { piv = r; break; }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) {
      std::swap(work.a[rank * n + j], work.a[piv * n + j]);
      if (rhs) std::swap(rhs->a[rank * n + j], rhs->a[piv * n + j]);
    }
    int s = f.inv(work.at(rank, col));
    for (int j = 0; j < n; ++j) {
      work.at(rank, j) = f.mul(work.at(rank, j), s);
      if (rhs) rhs->at(rank, j) = f.mul(rhs->at(rank, j), s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == rank || !work.at(r, col)) continue;
      int c = work.at(r, col);
      for (int j = 0; j < n; ++j) {
        work.at(r, j) = f.sub(work.at(r, j), f.mul(c, work.at(rank, j)));
        if (rhs) rhs->at(r, j) = f.sub(rhs->at(r, j), f.mul(c, rhs->at(rank, j)));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool mat_invertible(const Mat& m) {
  Mat w = m;
  return gauss(w, nullptr) == m.n;
}

Mat mat_inverse(const Mat& m) {
  Mat w = m, r = Mat::identity(m.q, m.n);
  if (gauss(w, &r) != m.n) throw std::invalid_argument("singular matrix");
  return r;
}

std::vector<int> normalize_projective(const GF& f, std::vector<int> v) {
  for (int x : v) {
    if (x == 0) continue;
    if (x != 1) {
      int s = f.inv(x);
      for (int& y : v) y = f.mul(y, s);
    }
    return v;
  }
  throw std::invalid_argument("zero vector has no projective normalization");
}

namespace {

std::vector<std::vector<int>> all_vectors(int q, int n, bool skip_zero) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(n, 0);
  while (true) {
    if (!skip_zero || std::any_of(v.begin(), v.end(), [](int x) { return x != 0; }))
      out.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[i] == q - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

// value of the quadratic form theta_a at x over GF(2)^n:
// theta_0(x) = sum x_{2i} x_{2i+1}, theta_a = theta_0 + <a,x>
int minus_form_value(const std::vector<int>& a, unsigned x, int n) {
  int v = 0;
  for (int i = 0; i + 1 < n; i += 2) v ^= ((x >> i) & 1u) & ((x >> (i + 1)) & 1u);
  for (int i = 0; i < n; ++i) v ^= (a[i] & 1) & static_cast<int>((x >> i) & 1u);
  return v;
}

}  // namespace

std::vector<std::vector<int>> space_points(MatSpace space, int q, int n) {
  const GF& f = GF::get(q);
  switch (space) {
    case MatSpace::Affine:
      return all_vectors(q, n, false);
    case MatSpace::Projective: {
      std::vector<std::vector<int>> pts;
      for (auto& v : all_vectors(q, n, true)) {
        auto nv = normalize_projective(f, v);
        if (nv == v) pts.push_back(std::move(nv));
      }
      std::sort(pts.begin(), pts.end());
      return pts;
    }
    case MatSpace::UnitaryIsotropic: {
      // sigma = Frobenius x -> x^p with q = p^2; identity Gram matrix
      if (f.e() % 2 != 0)
        throw std::invalid_argument("unitary space needs a square field order");
      std::vector<std::vector<int>> pts;
      for (auto& v : all_vectors(q, n, true)) {
        auto nv = normalize_projective(f, v);
        if (nv != v) continue;
        int h = 0;
        for (int i = 0; i < n; ++i) h = f.add(h, f.mul(v[i], f.frobenius(v[i])));
        if (h == 0) pts.push_back(std::move(nv));
      }
      std::sort(pts.begin(), pts.end());
      return pts;
    }
    case MatSpace::SymplecticMinusForms: {
      if (q != 2 || n % 2 != 0)
        throw std::invalid_argument("minus-type forms need q=2 and even dimension");
      std::vector<std::vector<int>> pts;
      for (auto& a : all_vectors(2, n, false)) {
        int zeros = 0;
        for (unsigned x = 0; x < (1u << n); ++x)
          if (minus_form_value(a, x, n) == 0) ++zeros;
        int minus_zeros = (1 << (n - 1)) - (1 << (n / 2 - 1));
        if (zeros == minus_zeros) pts.push_back(a);
      }
      std::sort(pts.begin(), pts.end());
      return pts;
    }
  }
  throw std::logic_error("unreachable");
}

PermGroup matrix_action(const std::vector<Mat>& gens, MatSpace space,
                        long long max_degree, bool add_translations) {
  if (gens.empty()) throw std::invalid_argument("matrix action needs at least one matrix");
  int q = gens[0].q, n = gens[0].n;
  const GF& f = GF::get(q);
  auto pts = space_points(space, q, n);
  if (static_cast<long long>(pts.size()) > max_degree)
    throw bound_exceeded("action degree " + std::to_string(pts.size()) +
                         " exceeds maximum " + std::to_string(max_degree));
  std::map<std::vector<int>, int> idx;
  for (size_t i = 0; i < pts.size(); ++i) idx.emplace(pts[i], static_cast<int>(i));

  auto image_of = [&](const Mat& m) {
    if (!mat_invertible(m)) throw std::invalid_argument("singular generator matrix");
    std::vector<int> img(pts.size());
    if (space == MatSpace::SymplecticMinusForms) {
      Mat mi = mat_inverse(m);
      for (size_t i = 0; i < pts.size(); ++i) {
        // (theta^M)(x) = theta(x * M^-1); recover the linear part a' by
        // evaluating against theta_0
        std::vector<int> ap(n, 0);
        for (int bit = 0; bit < n; ++bit) {
          std::vector<int> x(n, 0);
          x[bit] = 1;
          auto y = vec_mat(x, mi);
          unsigned ycode = 0;
          for (int j = 0; j < n; ++j) ycode |= static_cast<unsigned>(y[j] & 1) << j;
          unsigned xcode = 1u << bit;
          int theta0_x = minus_form_value(std::vector<int>(n, 0), xcode, n);
          ap[bit] = minus_form_value(pts[i], ycode, n) ^ theta0_x;
        }
        // the extraction above assumes theta^M - theta_0 is linear, which
        // holds exactly when M preserves the polarization; verify pointwise
        for (unsigned x = 0; x < (1u << n); ++x) {
          std::vector<int> xv(n);
          for (int j = 0; j < n; ++j) xv[j] = static_cast<int>((x >> j) & 1u);
          auto y = vec_mat(xv, mi);
          unsigned ycode = 0;
          for (int j = 0; j < n; ++j) ycode |= static_cast<unsigned>(y[j] & 1) << j;
          if (minus_form_value(pts[i], ycode, n) != minus_form_value(ap, x, n))
            throw std::invalid_argument("matrix is not symplectic for the standard form");
        }
        auto it = idx.find(ap);
        if (it == idx.end()) throw std::invalid_argument("matrix does not preserve the form type");
        img[i] = it->second;
      }
    } else if (space == MatSpace::Affine) {
      for (size_t i = 0; i < pts.size(); ++i) {
        auto v = vec_mat(pts[i], m);
        img[i] = idx.at(v);
      }
    } else {
      for (size_t i = 0; i < pts.size(); ++i) {
        auto v = normalize_projective(f, vec_mat(pts[i], m));
        auto it = idx.find(v);
        if (it == idx.end())
          throw std::invalid_argument("matrix does not preserve the point set");
        img[i] = it->second;
      }
    }
    return Perm(std::move(img));
  };

  std::vector<Perm> pgens;
  for (const Mat& m : gens) pgens.push_back(image_of(m));
  if (add_translations && space == MatSpace::Affine) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> img(pts.size());
      for (size_t i = 0; i < pts.size(); ++i) {
        auto v = pts[i];
        v[b] = f.add(v[b], 1);
        img[i] = idx.at(v);
      }
      pgens.push_back(Perm(std::move(img)));
    }
  }
  return PermGroup(static_cast<int>(pts.size()), pgens);
}

}  // namespace ftpi
