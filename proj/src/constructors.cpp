#include "ftpi/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ftpi {

PermGroup standard_group(StandardKind kind, int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  auto cycle = [&](const std::vector<int>& pts) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (size_t i = 0; i < pts.size(); ++i) img[pts[i]] = pts[(i + 1) % pts.size()];
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  switch (kind) {
    case StandardKind::Sym:
      if (n >= 2) gens.push_back(cycle({0, 1}));
      if (n >= 3) {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        gens.push_back(cycle(all));
      }
      break;
    case StandardKind::Alt:
      if (n >= 3) gens.push_back(cycle({0, 1, 2}));
      if (n >= 4) {
        std::vector<int> pts;
        if (n % 2 == 1) {
          pts.resize(n);
          std::iota(pts.begin(), pts.end(), 0);
        } else {
          pts.resize(n - 1);
          std::iota(pts.begin(), pts.end(), 1);
        }
        gens.push_back(cycle(pts));
      }
      break;
    case StandardKind::Cyclic: {
      std::vector<int> all(n);
      std::iota(all.begin(), all.end(), 0);
      if (n >= 2) gens.push_back(cycle(all));
      break;
    }
    case StandardKind::Dihedral: {
      if (n < 3) throw std::invalid_argument("dihedral groups need degree >= 3");
      std::vector<int> all(n);
      std::iota(all.begin(), all.end(), 0);
      gens.push_back(cycle(all));
      std::vector<int> img(n);
      for (int i = 0; i < n; ++i) img[i] = (n - i) % n;
      gens.push_back(Perm(std::move(img)));
      break;
    }
  }
  if (gens.empty()) gens.push_back(Perm(n));
  return PermGroup(n, gens);
}

namespace {

Mat mat2(int q, int a, int b, int c, int d) {
  Mat m{q, 2, {a, b, c, d}};
  return m;
}

}  // namespace

Perm frobenius_on_space(MatSpace space, int q, int n) {
  const GF& f = GF::get(q);
  auto pts = space_points(space, q, n);
  std::map<std::vector<int>, int> idx;
  for (size_t i = 0; i < pts.size(); ++i) idx.emplace(pts[i], static_cast<int>(i));
  std::vector<int> img(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    std::vector<int> v = pts[i];
    for (int& x : v) x = f.frobenius(x);
    if (space == MatSpace::Projective || space == MatSpace::UnitaryIsotropic)
      v = normalize_projective(f, v);
    img[i] = idx.at(v);
  }
  return Perm(std::move(img));
}

PermGroup projective_line_group(int q, ProjVariant variant) {
  const GF& f = GF::get(q);
  if (variant == ProjVariant::M10 && q != 9)
    throw std::invalid_argument("M10 requires q = 9");

  // SL(2,q): upper and lower transvections over a GF(p)-basis of GF(q)
  std::vector<Mat> sl;
  int basis = 1;
  for (int i = 0; i < f.e(); ++i) {
    sl.push_back(mat2(q, 1, basis, 0, 1));
    sl.push_back(mat2(q, 1, 0, basis, 1));
    basis = f.mul(basis, f.primitive_element());
  }
  // with basis {w^0..w^{e-1}}: powers of a primitive element span GF(q)
  PermGroup psl = matrix_action(sl, MatSpace::Projective);

  if (variant == ProjVariant::PSL) return psl;

  Mat diag = mat2(q, f.primitive_element(), 0, 0, 1);
  Perm delta = matrix_action({diag}, MatSpace::Projective).generators()[0];
  Perm phi = frobenius_on_space(MatSpace::Projective, q, 2);

  std::vector<Perm> gens = psl.generators();
  switch (variant) {
    case ProjVariant::PGL:
      gens.push_back(delta);
      break;
    case ProjVariant::PSigmaL:
      gens.push_back(phi);
      break;
    case ProjVariant::PGammaL:
      gens.push_back(delta);
      gens.push_back(phi);
      break;
    case ProjVariant::M10: {
      gens.push_back(delta * phi);
      PermGroup m10(q + 1, gens);
      // the third index-2 overgroup of PSL(2,9) in PGammaL(2,9)
      if (m10.order() != 720 || m10.contains(delta) || m10.contains(phi))
        throw std::logic_error("M10 construction failed its characterization");
      return m10;
    }
    default:
      break;
  }
  return PermGroup(q + 1, gens);
}

PermGroup action_on_k_subsets(const PermGroup& g, int k, long long max_degree) {
  int n = g.degree();
  if (k < 1 || k > n) throw std::invalid_argument("subset size out of range");
  i64 deg = binomial_clamped(n, k);
  if (deg > max_degree)
    throw bound_exceeded("k-subset action degree " + std::to_string(deg) +
                         " exceeds maximum " + std::to_string(max_degree));
  // lexicographically ordered k-subsets
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    subsets.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  std::map<std::vector<int>, int> idx;
  for (size_t i = 0; i < subsets.size(); ++i) idx.emplace(subsets[i], static_cast<int>(i));
  std::vector<Perm> gens;
  for (const Perm& p : g.generators()) {
    std::vector<int> img(subsets.size());
    for (size_t i = 0; i < subsets.size(); ++i) {
      std::vector<int> t(k);
      for (int j = 0; j < k; ++j) t[j] = p[subsets[i][j]];
      std::sort(t.begin(), t.end());
      img[i] = idx.at(t);
    }
    gens.push_back(Perm(std::move(img)));
  }
  if (gens.empty()) gens.push_back(Perm(static_cast<int>(subsets.size())));
  return PermGroup(static_cast<int>(subsets.size()), gens);
}

std::vector<Mat> sl_generators(int n, int q) {
  // elementary transvection E_{0,1} and the n-cycle companion matrix with
  // determinant fixed up via a sign
  const GF& f = GF::get(q);
  Mat t = Mat::identity(q, n);
  t.at(0, 1) = 1;
  Mat c{q, n, std::vector<int>(n * n, 0)};
  // rows: e_0 -> e_{n-1} sign, e_i -> e_{i-1}
  for (int i = 1; i < n; ++i) c.at(i, i - 1) = 1;
  c.at(0, n - 1) = (n % 2 == 0) ? f.neg(1) : 1;
  std::vector<Mat> out{t, c};
  if (f.e() > 1) {
    // extra transvections over a basis so the full field is generated
    int basis = f.primitive_element();
    for (int i = 1; i < f.e(); ++i) {
      Mat tb = Mat::identity(q, n);
      tb.at(0, 1) = basis;
      out.push_back(tb);
      basis = f.mul(basis, f.primitive_element());
    }
  }
  return out;
}

std::vector<Mat> sp2_transvections(int n) {
  if (n % 2) throw std::invalid_argument("symplectic dimension must be even");
  // B(x,y) = sum (x_{2i} y_{2i+1} + x_{2i+1} y_{2i}) over GF(2)
  auto bform = [&](const std::vector<int>& x, const std::vector<int>& y) {
    int v = 0;
    for (int i = 0; i + 1 < n; i += 2) v ^= (x[i] & y[i + 1]) ^ (x[i + 1] & y[i]);
    return v;
  };
  std::vector<Mat> out;
  std::vector<int> v(n, 0);
  // iterate nonzero vectors, t_v : x -> x + B(x,v) v
  while (true) {
    int i = n - 1;
    while (i >= 0 && v[i] == 1) v[i--] = 0;
    if (i < 0) break;
    v[i] = 1;
    Mat m = Mat::identity(2, n);
    for (int r = 0; r < n; ++r) {
      std::vector<int> e(n, 0);
      e[r] = 1;
      int b = bform(e, v);
      if (b)
        for (int c = 0; c < n; ++c) m.at(r, c) ^= v[c];
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace ftpi
