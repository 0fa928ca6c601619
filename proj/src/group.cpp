#include "ftpi/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ftpi {

namespace {

// orbit of `start` under `gens` with transversal reps (BFS, generators in
// order, so the result is deterministic)
void orbit_transversal(int degree, const std::vector<Perm>& gens, int start,
                       std::vector<int>& orbit, std::vector<Perm>& reps,
                       std::vector<int>& slot) {
  orbit.clear();
  reps.clear();
  slot.assign(degree, -1);
  orbit.push_back(start);
  reps.push_back(Perm(degree));
  slot[start] = 0;
  for (size_t i = 0; i < orbit.size(); ++i) {
    for (const Perm& g : gens) {
      int to = g[orbit[i]];
      if (slot[to] < 0) {
        slot[to] = static_cast<int>(orbit.size());
        orbit.push_back(to);
        reps.push_back(reps[i] * g);
      }
    }
  }
}

}  // namespace

mpz_class StabChain::order() const {
  mpz_class o = 1;
  for (const auto& orb : orbit) o *= static_cast<unsigned long>(orb.size());
  return o;
}

std::pair<Perm, size_t> StabChain::sift(const Perm& g) const {
  Perm h = g;
  for (size_t i = 0; i < base.size(); ++i) {
    int to = h[base[i]];
    if (slot[i][to] < 0) return {h, i};
    h = h * transversal[i][slot[i][to]].inverse();
  }
  return {h, base.size()};
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree) return false;
  auto [res, lvl] = sift(g);
  (void)lvl;
  return res.is_identity();
}

std::vector<Perm> StabChain::level_gens(size_t level) const {
  std::vector<Perm> out;
  for (const Perm& s : strong_gens) {
    bool fixes = true;
    for (size_t i = 0; i < level && i < base.size(); ++i)
      if (s[base[i]] != base[i]) { fixes = false; break; }
    if (fixes) out.push_back(s);
  }
  return out;
}

StabChain build_chain(int degree, const std::vector<Perm>& gens,
                      const std::vector<int>& base_prefix) {
  StabChain c;
  c.degree = degree;
  for (int b : base_prefix) {
    if (b < 0 || b >= degree) throw std::invalid_argument("base point out of range");
    c.base.push_back(b);
  }
  if (c.base.empty()) {
    // default policy: start at the smallest moved point
    int first = degree;
    for (const Perm& g : gens) {
      int m = g.first_moved();
      if (m >= 0) first = std::min(first, m);
    }
    c.base.push_back(first < degree ? first : 0);
  }
  for (const Perm& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) c.strong_gens.push_back(g);
  }

  // make sure every strong generator moves some base point
  auto cover = [&](const Perm& h) {
    for (int b : c.base)
      if (h[b] != b) return;
    int m = h.first_moved();
    assert(m >= 0);
    c.base.push_back(m);
  };
  for (const Perm& g : c.strong_gens) cover(g);

  c.orbit.assign(c.base.size(), {});
  c.transversal.assign(c.base.size(), {});
  c.slot.assign(c.base.size(), {});

  auto recompute_level = [&](size_t i) {
    orbit_transversal(degree, c.level_gens(i), c.base[i], c.orbit[i],
                      c.transversal[i], c.slot[i]);
  };
  for (size_t i = 0; i < c.base.size(); ++i) recompute_level(i);

  // bottom-up verification (Schreier-Sims): levels deeper than i are
  // strongly generated; adding a residue at level j re-verifies from j down
  int i = static_cast<int>(c.base.size()) - 1;
  while (i >= 0) {
    recompute_level(static_cast<size_t>(i));
    bool added = false;
    const std::vector<Perm> lg = c.level_gens(static_cast<size_t>(i));
    for (size_t oi = 0; oi < c.orbit[i].size() && !added; ++oi) {
      for (const Perm& s : lg) {
        int to = s[c.orbit[i][oi]];
        Perm schreier =
            c.transversal[i][oi] * s * c.transversal[i][c.slot[i][to]].inverse();
        if (schreier.is_identity()) continue;
        // sift through the levels below i
        Perm h = std::move(schreier);
        size_t j = static_cast<size_t>(i) + 1;
        for (; j < c.base.size(); ++j) {
          int im = h[c.base[j]];
          if (c.slot[j][im] < 0) break;
          h = h * c.transversal[j][c.slot[j][im]].inverse();
        }
        if (h.is_identity()) continue;
        if (j == c.base.size()) {
          cover(h);  // may append a base point
          c.orbit.resize(c.base.size());
          c.transversal.resize(c.base.size());
          c.slot.resize(c.base.size());
          if (j >= c.base.size()) j = c.base.size() - 1;
        }
        c.strong_gens.push_back(std::move(h));
        for (size_t m = static_cast<size_t>(i); m <= j; ++m) recompute_level(m);
        i = static_cast<int>(j);
        added = true;
        break;
      }
    }
    if (!added) --i;
  }
  return c;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (const Perm& g : gens_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");
}

const StabChain& PermGroup::chain() const {
  if (!chain_)
    chain_ = std::make_shared<const StabChain>(build_chain(degree_, gens_));
  return *chain_;
}

std::optional<long long> PermGroup::order_i64() const {
  mpz_class o = order();
  if (!o.fits_slong_p()) return std::nullopt;
  return static_cast<long long>(o.get_si());
}

bool PermGroup::is_trivial() const {
  for (const Perm& g : gens_)
    if (!g.is_identity()) return false;
  return true;
}

std::vector<int> PermGroup::orbit_of(int point) const {
  std::vector<int> orb, slot;
  std::vector<Perm> reps;
  orbit_transversal(degree_, gens_, point, orb, reps, slot);
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<char> seen(degree_, 0);
  std::vector<std::vector<int>> out;
  for (int p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto orb = orbit_of(p);
    for (int x : orb) seen[x] = 1;
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const {
  if (degree_ == 0) return true;
  return static_cast<int>(orbit_of(0).size()) == degree_;
}

PermGroup PermGroup::point_stabilizer_prefix(int prefix) const {
  std::vector<int> base(prefix);
  std::iota(base.begin(), base.end(), 0);
  StabChain c = build_chain(degree_, gens_, base);
  std::vector<Perm> gens = c.level_gens(prefix);
  if (gens.empty()) gens.push_back(Perm(degree_));
  return PermGroup(degree_, gens);
}

int PermGroup::transitivity_degree(int bounded_t) const {
  if (degree_ == 0) return 0;
  if (!is_transitive()) return 0;
  int limit = bounded_t > 0 ? std::min(bounded_t, degree_) : degree_;
  std::vector<int> base(limit);
  std::iota(base.begin(), base.end(), 0);
  StabChain c = build_chain(degree_, gens_, base);
  int t = 0;
  for (int i = 0; i < limit; ++i) {
    if (static_cast<int>(c.orbit[i].size()) != degree_ - i) break;
    ++t;
  }
  return t;
}

std::vector<std::vector<std::vector<int>>> PermGroup::minimal_block_systems() const {
  if (!is_transitive()) throw std::invalid_argument("block systems need a transitive group");
  std::vector<std::vector<std::vector<int>>> systems;
  std::set<std::vector<std::vector<int>>> seen;
  for (int beta = 1; beta < degree_; ++beta) {
    // minimal block containing {0, beta}: union-find closure
    std::vector<int> parent(degree_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::pair<int, int>> pending{{0, beta}};
    auto unite = [&](int a, int b) {
      a = find(a); b = find(b);
      if (a == b) return;
      if (a > b) std::swap(a, b);
      parent[b] = a;
      pending.emplace_back(a, b);
    };
    unite(0, beta);
    for (size_t i = 0; i < pending.size(); ++i) {
      auto [a, b] = pending[i];
      for (const Perm& g : gens_) unite(g[a], g[b]);
    }
    // classes
    std::map<int, std::vector<int>> cls;
    for (int x = 0; x < degree_; ++x) cls[find(x)].push_back(x);
    if (cls.size() <= 1 || static_cast<int>(cls.size()) == degree_) continue;
    std::vector<std::vector<int>> sys;
    for (auto& [root, pts] : cls) sys.push_back(pts);
    std::sort(sys.begin(), sys.end());
    if (seen.insert(sys).second) systems.push_back(sys);
  }
  std::sort(systems.begin(), systems.end(),
            [](const auto& a, const auto& b) {
              if (a[0].size() != b[0].size()) return a[0].size() < b[0].size();
              return a < b;
            });
  return systems;
}

bool PermGroup::is_primitive() const { return minimal_block_systems().empty(); }

std::vector<int> PermGroup::fixed_points() const {
  std::vector<int> out;
  for (int p = 0; p < degree_; ++p) {
    bool fixed = true;
    for (const Perm& g : gens_)
      if (g[p] != p) { fixed = false; break; }
    if (fixed) out.push_back(p);
  }
  return out;
}

PermGroup PermGroup::set_stabilizer(const std::vector<int>& set) const {
  std::vector<int> start = set;
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());
  for (int x : start)
    if (x < 0 || x >= degree_) throw std::invalid_argument("set point out of range");

  auto apply = [&](const std::vector<int>& s, const Perm& g) {
    std::vector<int> t(s.size());
    for (size_t i = 0; i < s.size(); ++i) t[i] = g[s[i]];
    std::sort(t.begin(), t.end());
    return t;
  };

  // orbit of the set with transversal; Schreier generators sifted into an
  // incrementally grown chain of the stabilizer
  std::map<std::vector<int>, int> index{{start, 0}};
  std::vector<std::vector<int>> sets{start};
  std::vector<Perm> reps{Perm(degree_)};
  std::vector<Perm> stab_gens;
  StabChain cur;  // rebuilt lazily when stab_gens changes
  bool dirty = true;
  auto contains_fast = [&](const Perm& p) {
    if (stab_gens.empty()) return p.is_identity();
    if (dirty) { cur = build_chain(degree_, stab_gens); dirty = false; }
    return cur.contains(p);
  };

  for (size_t i = 0; i < sets.size(); ++i) {
    for (const Perm& g : gens_) {
      auto img = apply(sets[i], g);
      auto it = index.find(img);
      if (it == index.end()) {
        index.emplace(img, static_cast<int>(sets.size()));
        sets.push_back(img);
        reps.push_back(reps[i] * g);
      } else {
        Perm schreier = reps[i] * g * reps[it->second].inverse();
        if (!schreier.is_identity() && !contains_fast(schreier)) {
          stab_gens.push_back(schreier);
          dirty = true;
        }
      }
    }
  }
  if (stab_gens.empty()) stab_gens.push_back(Perm(degree_));
  return PermGroup(degree_, stab_gens);
}

PermGroup PermGroup::derived_subgroup() const {
  // normal closure of generator commutators
  std::vector<Perm> gens;
  StabChain cur;
  bool dirty = true;
  auto contains = [&](const Perm& p) {
    if (gens.empty()) return p.is_identity();
    if (dirty) { cur = build_chain(degree_, gens); dirty = false; }
    return cur.contains(p);
  };
  auto add = [&](const Perm& p) {
    if (!p.is_identity() && !contains(p)) {
      gens.push_back(p);
      dirty = true;
      return true;
    }
    return false;
  };
  for (const Perm& a : gens_)
    for (const Perm& b : gens_)
      add(a.inverse() * b.inverse() * a * b);
  // close under conjugation by generators
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Perm> cur_gens = gens;
    for (const Perm& h : cur_gens)
      for (const Perm& g : gens_)
        if (add(h.conjugate_by(g))) changed = true;
  }
  if (gens.empty()) gens.push_back(Perm(degree_));
  return PermGroup(degree_, gens);
}

std::vector<Perm> PermGroup::elements(long long bound) const {
  std::vector<Perm> elems;
  std::unordered_set<Perm, PermHash> seen;
  elems.push_back(Perm(degree_));
  seen.insert(elems[0]);
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& g : gens_) {
      Perm n = elems[i] * g;
      if (seen.insert(n).second) {
        if (static_cast<long long>(elems.size()) >= bound)
          throw bound_exceeded("group order exceeds enumeration bound " +
                               std::to_string(bound));
        elems.push_back(std::move(n));
      }
    }
  }
  return elems;
}

CosetAction coset_action(const PermGroup& g, const PermGroup& h, long long max_degree) {
  // reps found by BFS in (coset, generator) order; point 0 is H itself
  const StabChain& hc = h.chain();
  for (const Perm& x : h.generators())
    if (!g.contains(x))
      throw std::invalid_argument("coset action: subgroup generator not in parent group");

  std::vector<Perm> reps{Perm(g.degree())};
  auto find_coset = [&](const Perm& x) -> int {
    for (size_t j = 0; j < reps.size(); ++j)
      if (hc.contains(x * reps[j].inverse())) return static_cast<int>(j);
    return -1;
  };
  std::vector<std::vector<int>> images_per_gen(g.generators().size());
  for (size_t i = 0; i < reps.size(); ++i) {
    for (size_t gi = 0; gi < g.generators().size(); ++gi) {
      Perm x = reps[i] * g.generators()[gi];
      int j = find_coset(x);
      if (j < 0) {
        j = static_cast<int>(reps.size());
        if (j >= max_degree)
          throw bound_exceeded("coset action degree exceeds maximum " +
                               std::to_string(max_degree));
        reps.push_back(std::move(x));
        for (auto& v : images_per_gen) v.resize(reps.size(), -1);
      }
      if (images_per_gen[gi].size() < reps.size())
        images_per_gen[gi].resize(reps.size(), -1);
      images_per_gen[gi][i] = j;
    }
  }
  int deg = static_cast<int>(reps.size());
  std::vector<Perm> img_gens;
  for (size_t gi = 0; gi < g.generators().size(); ++gi) {
    std::vector<int> img(deg);
    for (int i = 0; i < deg; ++i) {
      int j = images_per_gen[gi][i];
      if (j < 0) {
        Perm x = reps[i] * g.generators()[gi];
        j = find_coset(x);
      }
      img[i] = j;
    }
    img_gens.push_back(Perm(std::move(img)));
  }
  PermGroup image(deg, img_gens);
  auto reps_copy = std::make_shared<std::vector<Perm>>(reps);
  auto hchain = std::make_shared<StabChain>(hc);
  auto mapper = [reps_copy, hchain, deg](const Perm& x) {
    std::vector<int> img(deg);
    for (int i = 0; i < deg; ++i) {
      Perm y = (*reps_copy)[i] * x;
      int j = -1;
      for (int t = 0; t < deg; ++t)
        if (hchain->contains(y * (*reps_copy)[t].inverse())) { j = t; break; }
      if (j < 0) throw std::invalid_argument("coset map: element not in parent group");
      img[i] = j;
    }
    return Perm(std::move(img));
  };
  return CosetAction{std::move(image), mapper};
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h, long long scan_bound) {
  auto elems = g.elements(scan_bound);
  const StabChain& hc = h.chain();
  std::vector<Perm> ngens;
  StabChain cur;
  bool dirty = true;
  auto contains = [&](const Perm& p) {
    if (ngens.empty()) return p.is_identity();
    if (dirty) { cur = build_chain(g.degree(), ngens); dirty = false; }
    return cur.contains(p);
  };
  for (const Perm& x : elems) {
    bool norm = true;
    for (const Perm& hg : h.generators())
      if (!hc.contains(hg.conjugate_by(x))) { norm = false; break; }
    if (norm && !x.is_identity() && !contains(x)) {
      ngens.push_back(x);
      dirty = true;
    }
  }
  if (ngens.empty()) ngens.push_back(Perm(g.degree()));
  return PermGroup(g.degree(), ngens);
}

}  // namespace ftpi
