#include "ftpi/subgroup_lattice.hpp"

#include <omp.h>

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace ftpi {

namespace {

// ---------------------------------------------------------------------------
// Element table: all elements of a small group indexed in BFS order, with
// index-level product/conjugation helpers.

struct ElementTable {
  const PermGroup* group = nullptr;
  std::vector<Perm> elems;
  std::unordered_map<Perm, int, PermHash> index;
  std::vector<long long> elem_order;
  std::vector<int> elem_inverse;
  i64 order = 0;

  explicit ElementTable(const PermGroup& g, i64 bound) : group(&g) {
    elems = g.elements(bound);
    order = static_cast<i64>(elems.size());
    index.reserve(elems.size() * 2);
    for (size_t i = 0; i < elems.size(); ++i)
      index.emplace(elems[i], static_cast<int>(i));
    elem_order.resize(elems.size());
    elem_inverse.resize(elems.size());
    for (size_t i = 0; i < elems.size(); ++i) {
      elem_order[i] = elems[i].order();
      elem_inverse[i] = at(elems[i].inverse());
    }
  }

  int at(const Perm& p) const {
    auto it = index.find(p);
    return it == index.end() ? -1 : it->second;
  }
  int mul(int a, int b) const { return at(elems[a] * elems[b]); }
  int conj(int a, int g) const { return at(elems[a].conjugate_by(elems[g])); }
};

using Key = std::pair<uint64_t, uint64_t>;
struct KeyHash {
  size_t operator()(const Key& k) const { return k.first ^ (k.second * 0x9e3779b97f4a7c15ull); }
};

Key set_key(const std::vector<int>& sorted_elems) {
  uint64_t h1 = 1469598103934665603ull, h2 = 0x2545f4914f6cdd1dull;
  for (int e : sorted_elems) {
    h1 = (h1 ^ static_cast<uint64_t>(e + 1)) * 1099511628211ull;
    h2 = (h2 + static_cast<uint64_t>(e + 1)) * 0x100000001b3ull;
    h2 ^= h2 >> 29;
  }
  return {h1 ^ sorted_elems.size(), h2 + sorted_elems.size()};
}

struct ClassData {
  std::vector<int> elems;  // sorted element indexes of the representative
  std::vector<int> gens;   // element indexes of a small generating set
  i64 order = 1;
  i64 class_size = 1;
  bool ext_done = false;
  bool join_done = false;
  std::vector<int> normalizer;  // element indexes, filled on demand
};

class LatticeBuilder {
 public:
  LatticeBuilder(const ElementTable& t) : t_(t) {
    // index permutations of conjugation by the parent generators
    const auto& gens = t_.group->generators();
    conj_by_gen_.resize(gens.size());
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      conj_by_gen_[gi].resize(t_.elems.size());
      for (size_t e = 0; e < t_.elems.size(); ++e)
        conj_by_gen_[gi][e] = t_.at(t_.elems[e].conjugate_by(gens[gi]));
    }
    build_ppc();
  }

  void run() {
    // seeds: trivial subgroup, prime-power cyclic subgroups, the group itself
    register_set({t_.at(Perm(t_.group->degree()))});
    for (const auto& z : ppc_) register_set(z.elems);
    std::vector<int> all(t_.elems.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    register_set(all);

    bool changed = true;
    while (changed) {
      changed = false;
      // cyclic-extension phase, by ascending order
      for (size_t ci = 0; ci < classes_.size(); ++ci) {
        if (classes_[ci].ext_done) continue;
        classes_[ci].ext_done = true;
        if (extend_class(static_cast<int>(ci))) changed = true;
      }
      // join phase (completes perfect subgroups)
      for (size_t ci = 0; ci < classes_.size(); ++ci) {
        if (classes_[ci].join_done) continue;
        classes_[ci].join_done = true;
        if (join_class(static_cast<int>(ci))) changed = true;
      }
    }
  }

  std::vector<ClassData>& classes() { return classes_; }
  const ElementTable& table() const { return t_; }

 private:
  const ElementTable& t_;
  std::vector<std::vector<int>> conj_by_gen_;
  std::unordered_map<Key, int, KeyHash> registry_;
  std::vector<ClassData> classes_;

  // prime-power cyclic subgroups
  struct Ppc {
    std::vector<int> elems;  // sorted
    int gen = 0;             // canonical generator (smallest index of full order)
  };
  std::vector<Ppc> ppc_;
  std::vector<int> elem_ppc_;  // element index -> ppc id (-1 if order not a prime power)

  static bool is_prime_power(long long n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.size() == 1;
  }

  void build_ppc() {
    elem_ppc_.assign(t_.elems.size(), -1);
    std::unordered_map<Key, int, KeyHash> seen;
    for (size_t e = 0; e < t_.elems.size(); ++e) {
      if (!is_prime_power(t_.elem_order[e])) continue;
      std::vector<int> elems;
      int cur = static_cast<int>(e);
      int id_idx = t_.at(Perm(t_.group->degree()));
      elems.push_back(id_idx);
      while (cur != id_idx) {
        elems.push_back(cur);
        cur = t_.mul(cur, static_cast<int>(e));
      }
      std::sort(elems.begin(), elems.end());
      Key k = set_key(elems);
      auto it = seen.find(k);
      if (it == seen.end()) {
        seen.emplace(k, static_cast<int>(ppc_.size()));
        elem_ppc_[e] = static_cast<int>(ppc_.size());
        ppc_.push_back({std::move(elems), static_cast<int>(e)});
      } else {
        elem_ppc_[e] = it->second;
        // keep the canonical generator minimal among full-order elements
        Ppc& z = ppc_[it->second];
        if (t_.elem_order[e] == t_.elem_order[z.gen] && static_cast<int>(e) < z.gen)
          z.gen = static_cast<int>(e);
      }
    }
  }

  // derive a small generating set from a sorted element list
  std::vector<int> derive_gens(const std::vector<int>& elems) {
    std::vector<int> gens;
    std::vector<char> in_closure(t_.elems.size(), 0);
    std::vector<int> closure;
    int id_idx = t_.at(Perm(t_.group->degree()));
    closure.push_back(id_idx);
    in_closure[id_idx] = 1;
    auto grow = [&](int g) {
      gens.push_back(g);
      for (size_t i = 0; i < closure.size(); ++i)
        for (int gg : gens) {
          int n = t_.mul(closure[i], gg);
          if (!in_closure[n]) {
            in_closure[n] = 1;
            closure.push_back(n);
          }
        }
    };
    for (int e : elems) {
      if (in_closure[e]) continue;
      grow(e);
      if (closure.size() == elems.size()) break;
    }
    return gens;
  }

  // registers the subgroup given by its sorted element list along with its
  // whole conjugacy class; returns (class id, was_new)
  std::pair<int, bool> register_set(std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    Key k = set_key(elems);
    auto it = registry_.find(k);
    if (it != registry_.end()) return {it->second, false};

    int id = static_cast<int>(classes_.size());
    ClassData cd;
    cd.order = static_cast<i64>(elems.size());
    cd.gens = derive_gens(elems);
    cd.elems = elems;
    classes_.push_back(std::move(cd));

    // conjugate orbit of the element set under the parent generators
    std::vector<std::vector<int>> orbit{elems};
    registry_.emplace(k, id);
    for (size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& cm : conj_by_gen_) {
        std::vector<int> img(orbit[i].size());
        for (size_t j = 0; j < orbit[i].size(); ++j) img[j] = cm[orbit[i][j]];
        std::sort(img.begin(), img.end());
        Key ik = set_key(img);
        if (registry_.emplace(ik, id).second) orbit.push_back(std::move(img));
      }
    }
    classes_[id].class_size = static_cast<i64>(orbit.size());
    return {id, true};
  }

  const std::vector<int>& normalizer_of(int ci) {
    ClassData& cd = classes_[ci];
    if (!cd.normalizer.empty()) return cd.normalizer;
    std::vector<char> mask(t_.elems.size(), 0);
    for (int e : cd.elems) mask[e] = 1;
    for (size_t g = 0; g < t_.elems.size(); ++g) {
      bool norm = true;
      for (int hg : cd.gens)
        if (!mask[t_.conj(hg, static_cast<int>(g))]) { norm = false; break; }
      if (norm) cd.normalizer.push_back(static_cast<int>(g));
    }
    return cd.normalizer;
  }

  // generating set of a subgroup given by its element list
  std::vector<int> gens_of_element_list(const std::vector<int>& elems) {
    return derive_gens(elems);
  }

  bool extend_class(int ci) {
    bool found = false;
    const std::vector<int> norm = normalizer_of(ci);
    const i64 horder = classes_[ci].order;
    std::vector<char> visited(t_.elems.size(), 0);
    for (int e : classes_[ci].elems) visited[e] = 1;
    for (int z : norm) {
      if (visited[z]) continue;
      // minimal m with z^m in H; extension requires m prime
      long long o = t_.elem_order[z];
      long long m0 = 0;
      for (i64 d : divisors(o)) {
        if (d == o) { m0 = o; break; }
        // z^d
        int p = z;
        // compute z^d by repeated squaring over indexes (d small; linear ok)
        p = pow_index(z, d);
        if (visited_class_contains(ci, p)) { m0 = d; break; }
      }
      if (m0 <= 1 || !is_prime(static_cast<i64>(m0))) continue;
      if (horder * m0 > t_.order) continue;
      // H' = union of H z^t
      std::vector<int> elems;
      elems.reserve(static_cast<size_t>(horder * m0));
      int zp = t_.at(Perm(t_.group->degree()));  // identity
      for (long long tpow = 0; tpow < m0; ++tpow) {
        for (int h : classes_[ci].elems) elems.push_back(t_.mul(h, zp));
        zp = t_.mul(zp, z);
      }
      for (int e : elems) visited[e] = 1;
      if (register_set(std::move(elems)).second) found = true;
    }
    return found;
  }

  int pow_index(int z, long long d) {
    int r = t_.at(Perm(t_.group->degree()));
    int b = z;
    while (d > 0) {
      if (d & 1) r = t_.mul(r, b);
      d >>= 1;
      if (d) b = t_.mul(b, b);
    }
    return r;
  }

  bool visited_class_contains(int ci, int e) {
    // membership in the representative's element list (sorted)
    const auto& v = classes_[ci].elems;
    return std::binary_search(v.begin(), v.end(), e);
  }

  bool join_class(int ci) {
    bool found = false;
    const std::vector<int> norm = normalizer_of(ci);
    // small generating set of the normalizer for orbit reduction
    std::vector<int> ngens = derive_gens(norm);

    // orbits of N on the prime-power cyclic subgroups
    std::vector<char> seen(ppc_.size(), 0);
    std::vector<int> reps;
    for (size_t z = 0; z < ppc_.size(); ++z) {
      if (seen[z]) continue;
      reps.push_back(static_cast<int>(z));
      std::vector<int> orb{static_cast<int>(z)};
      seen[z] = 1;
      for (size_t i = 0; i < orb.size(); ++i) {
        for (int n : ngens) {
          int zi = elem_ppc_[t_.conj(ppc_[orb[i]].gen, n)];
          assert(zi >= 0);
          if (!seen[zi]) {
            seen[zi] = 1;
            orb.push_back(zi);
          }
        }
      }
    }

    std::vector<char> hmask(t_.elems.size(), 0);
    for (int e : classes_[ci].elems) hmask[e] = 1;

    // evaluate candidate joins in parallel, register serially in order
    std::vector<std::vector<int>> results(reps.size());
    const std::vector<int> hgens = classes_[ci].gens;
#pragma omp parallel for schedule(dynamic)
    for (size_t ri = 0; ri < reps.size(); ++ri) {
      const Ppc& z = ppc_[reps[ri]];
      bool inside = true;
      for (int e : z.elems)
        if (!hmask[e]) { inside = false; break; }
      if (inside) continue;
      results[ri] = closure_join(hgens, z.gen);
    }
    for (auto& r : results) {
      if (r.empty()) continue;
      if (register_set(std::move(r)).second) found = true;
    }
    return found;
  }

  // closure of <gens, z>; returns sorted element list ({} never: contains id)
  std::vector<int> closure_join(const std::vector<int>& gens, int z) const {
    std::vector<int> use = gens;
    use.push_back(z);
    std::vector<char> in(t_.elems.size(), 0);
    std::vector<int> elems;
    int id_idx = 0;
    // identity has index 0 by BFS construction
    assert(t_.elems[0].is_identity());
    in[id_idx] = 1;
    elems.push_back(id_idx);
    const i64 half = t_.order / 2;
    for (size_t i = 0; i < elems.size(); ++i) {
      for (int g : use) {
        int n = t_.mul(elems[i], g);
        if (!in[n]) {
          in[n] = 1;
          elems.push_back(n);
          if (static_cast<i64>(elems.size()) > half) {
            // a subgroup larger than |G|/2 is G itself
            std::vector<int> all(t_.elems.size());
            for (size_t a = 0; a < all.size(); ++a) all[a] = static_cast<int>(a);
            return all;
          }
        }
      }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
  }
};

struct LatticeCacheKey {
  int degree;
  size_t gens_hash;
  bool operator==(const LatticeCacheKey&) const = default;
};
struct LatticeCacheKeyHash {
  size_t operator()(const LatticeCacheKey& k) const {
    return std::hash<int>()(k.degree) * 31 ^ k.gens_hash;
  }
};

size_t gens_fingerprint(const PermGroup& g) {
  size_t h = 0xcbf29ce484222325ull;
  for (const Perm& p : g.generators()) h = h * 1099511628211ull ^ p.hash();
  return h;
}

std::mutex lattice_mutex;
std::unordered_map<LatticeCacheKey, std::shared_ptr<const SubgroupLattice>,
                   LatticeCacheKeyHash>
    lattice_cache;

}  // namespace

std::shared_ptr<const SubgroupLattice> SubgroupLattice::of(const PermGroup& g, i64 bound) {
  LatticeCacheKey key{g.degree(), gens_fingerprint(g)};
  {
    std::lock_guard<std::mutex> lock(lattice_mutex);
    auto it = lattice_cache.find(key);
    if (it != lattice_cache.end()) return it->second;
  }
  mpz_class o = g.order();
  if (o > bound)
    throw bound_exceeded("group order " + o.get_str() +
                         " exceeds the subgroup enumeration bound " + std::to_string(bound));

  ElementTable table(g, bound);
  LatticeBuilder builder(table);
  builder.run();

  auto lat = std::make_shared<SubgroupLattice>();
  lat->parent_order_ = table.order;
  for (auto& cd : builder.classes()) {
    SubgroupClass sc;
    std::vector<Perm> gens;
    for (int e : cd.gens) gens.push_back(table.elems[e]);
    if (gens.empty()) gens.push_back(Perm(g.degree()));
    sc.representative = PermGroup(g.degree(), std::move(gens));
    sc.rep_order = cd.order;
    sc.parent_order = table.order;
    sc.index = table.order / cd.order;
    sc.class_size = cd.class_size;
    // orbit sizes of the representative on the natural points
    for (const auto& orb : sc.representative.orbits())
      sc.orbit_sizes.push_back(static_cast<int>(orb.size()));
    std::sort(sc.orbit_sizes.begin(), sc.orbit_sizes.end());
    lat->classes_.push_back(std::move(sc));
  }
  // canonical order: by order, then by the representative's sorted element key
  std::vector<size_t> perm_idx(lat->classes_.size());
  for (size_t i = 0; i < perm_idx.size(); ++i) perm_idx[i] = i;
  auto& cds = builder.classes();
  std::sort(perm_idx.begin(), perm_idx.end(), [&](size_t a, size_t b) {
    if (cds[a].order != cds[b].order) return cds[a].order < cds[b].order;
    return cds[a].elems < cds[b].elems;
  });
  std::vector<SubgroupClass> sorted;
  for (size_t i : perm_idx) sorted.push_back(std::move(lat->classes_[i]));
  lat->classes_ = std::move(sorted);

  std::lock_guard<std::mutex> lock(lattice_mutex);
  auto [it, inserted] = lattice_cache.emplace(key, lat);
  return it->second;
}

std::vector<SubgroupClass> subgroup_classes(const PermGroup& g, i64 max_parent_order) {
  return SubgroupLattice::of(g, max_parent_order)->classes();
}

std::vector<SubgroupClass> subgroups_with_orbit(const PermGroup& g, i64 m, int s,
                                                bool exact_index, i64 max_parent_order) {
  if (s >= g.degree()) throw std::invalid_argument("orbit size must be below the degree");
  auto lat = SubgroupLattice::of(g, max_parent_order);
  std::vector<SubgroupClass> out;
  for (const auto& sc : lat->classes()) {
    bool idx_ok = exact_index ? sc.index == m : (m % sc.index == 0);
    if (!idx_ok) continue;
    if (std::find(sc.orbit_sizes.begin(), sc.orbit_sizes.end(), s) == sc.orbit_sizes.end())
      continue;
    out.push_back(sc);
  }
  return out;
}

bool alternating_shortcut(i64 d, i64 s, i64 m) {
  if (s <= 0 || s >= d) throw std::invalid_argument("alternating_shortcut needs 0 < s < d");
  i64 bin = binomial_clamped(d, s);
  // a multiple of bin divides m iff bin itself divides m
  return !(bin <= m && m % bin == 0);
}

PermGroup sylow_subgroup(const PermGroup& g, i64 p, i64 max_parent_order) {
  if (!is_prime(p)) throw std::invalid_argument("sylow: p must be prime");
  mpz_class o = g.order();
  if (o > max_parent_order)
    throw bound_exceeded("group order " + o.get_str() +
                         " exceeds the enumeration bound for sylow computation");
  i64 order = static_cast<i64>(o.get_si());
  i64 ppart = 1;
  while (order % p == 0) order /= p, ppart *= p;

  ElementTable t(g, max_parent_order);
  int id_idx = t.at(Perm(g.degree()));

  // current p-subgroup as element list
  std::vector<int> cur{id_idx};
  std::vector<int> gens;
  auto order_of = [&]() { return static_cast<i64>(cur.size()); };

  auto rebuild = [&](int extra) {
    gens.push_back(extra);
    std::vector<char> in(t.elems.size(), 0);
    std::vector<int> elems{id_idx};
    in[id_idx] = 1;
    for (size_t i = 0; i < elems.size(); ++i)
      for (int ge : gens) {
        int n = t.mul(elems[i], ge);
        if (!in[n]) { in[n] = 1; elems.push_back(n); }
      }
    std::sort(elems.begin(), elems.end());
    cur = std::move(elems);
  };

  while (order_of() < ppart) {
    // normalizer scan, then pick the first p-element whose p-th power lands
    // in the current subgroup (it exists: P < N_Syl(P) whenever P is not Sylow)
    std::vector<char> mask(t.elems.size(), 0);
    for (int e : cur) mask[e] = 1;
    int chosen = -1;
    for (size_t cand = 0; cand < t.elems.size() && chosen < 0; ++cand) {
      if (mask[cand]) continue;
      long long eo = t.elem_order[cand];
      bool ppow = true;
      long long q = eo;
      while (q % p == 0) q /= p;
      ppow = (q == 1);
      if (!ppow) continue;
      // must normalize cur
      bool norm = true;
      for (int hg : gens)
        if (!mask[t.conj(hg, static_cast<int>(cand))]) { norm = false; break; }
      if (!norm) continue;
      // descend to an element whose residue order mod cur is exactly p
      int z = static_cast<int>(cand);
      while (true) {
        int zp = z;
        // z^p
        long long d = p;
        int r = id_idx, b = z;
        while (d > 0) {
          if (d & 1) r = t.mul(r, b);
          d >>= 1;
          if (d) b = t.mul(b, b);
        }
        zp = r;
        if (mask[zp]) break;
        z = zp;
      }
      chosen = z;
    }
    if (chosen < 0)
      throw std::logic_error("sylow ascent failed to find a normalizing p-element");
    rebuild(chosen);
  }
  std::vector<Perm> pgens;
  for (int e : gens) pgens.push_back(t.elems[e]);
  if (pgens.empty()) pgens.push_back(Perm(g.degree()));
  return PermGroup(g.degree(), pgens);
}

}  // namespace ftpi
