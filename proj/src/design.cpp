#include "ftpi/design.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ftpi {

Design Design::make(int v, std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      throw std::invalid_argument("block contains a repeated point");
    if (!b.empty() && (b.front() < 0 || b.back() >= v))
      throw std::invalid_argument("block point out of range");
  }
  std::sort(blocks.begin(), blocks.end());
  return Design{v, std::move(blocks)};
}

PartitionSystem PartitionSystem::make(int v, std::vector<std::vector<int>> classes) {
  std::vector<char> seen(v, 0);
  size_t csize = classes.empty() ? 0 : classes[0].size();
  for (auto& c : classes) {
    std::sort(c.begin(), c.end());
    if (c.size() != csize) throw std::invalid_argument("partition classes must share one size");
    for (int x : c) {
      if (x < 0 || x >= v || seen[x])
        throw std::invalid_argument("partition classes must be disjoint and in range");
      seen[x] = 1;
    }
  }
  for (int x = 0; x < v; ++x)
    if (!seen[x]) throw std::invalid_argument("partition does not cover the point set");
  std::sort(classes.begin(), classes.end());
  return PartitionSystem{v, std::move(classes)};
}

int PartitionSystem::class_of(int point) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (std::binary_search(classes[i].begin(), classes[i].end(), point))
      return static_cast<int>(i);
  throw std::invalid_argument("point not covered by partition");
}

namespace {
inline size_t pair_index(int v, int a, int b) {
  // a < b; upper triangle row-major
  return static_cast<size_t>(a) * v - static_cast<size_t>(a) * (a + 1) / 2 + (b - a - 1);
}
}  // namespace

std::vector<i64> pair_counts_serial(const Design& d) {
  std::vector<i64> counts(static_cast<size_t>(d.v) * (d.v - 1) / 2, 0);
  for (const auto& blk : d.blocks)
    for (size_t i = 0; i < blk.size(); ++i)
      for (size_t j = i + 1; j < blk.size(); ++j)
        ++counts[pair_index(d.v, blk[i], blk[j])];
  return counts;
}

std::vector<i64> pair_counts_parallel(const Design& d) {
  std::vector<i64> counts(static_cast<size_t>(d.v) * (d.v - 1) / 2, 0);
  const auto nblocks = static_cast<long long>(d.blocks.size());
#pragma omp parallel for schedule(static)
  for (long long bi = 0; bi < nblocks; ++bi) {
    const auto& blk = d.blocks[bi];
    for (size_t i = 0; i < blk.size(); ++i)
      for (size_t j = i + 1; j < blk.size(); ++j) {
        i64& slot = counts[pair_index(d.v, blk[i], blk[j])];
#pragma omp atomic
        ++slot;
      }
  }
  return counts;
}

DesignReport verify_2_design(const Design& d) {
  DesignReport rep;
  if (d.v < 2 || d.blocks.empty())
    throw std::invalid_argument("verification needs at least two points and one block");
  size_t k = d.blocks[0].size();
  for (size_t bi = 0; bi < d.blocks.size(); ++bi) {
    if (d.blocks[bi].size() != k) {
      rep.witness = "block " + std::to_string(bi) + " has size " +
                    std::to_string(d.blocks[bi].size()) + ", expected " + std::to_string(k);
      return rep;
    }
  }
  std::vector<i64> point_counts(d.v, 0);
  for (const auto& blk : d.blocks)
    for (int x : blk) ++point_counts[x];
  for (int x = 0; x < d.v; ++x) {
    if (point_counts[x] != point_counts[0]) {
      rep.witness = "point " + std::to_string(x) + " lies in " +
                    std::to_string(point_counts[x]) + " blocks, point 0 in " +
                    std::to_string(point_counts[0]);
      return rep;
    }
  }
  auto counts = pair_counts_parallel(d);
  for (int a = 0; a < d.v; ++a)
    for (int b = a + 1; b < d.v; ++b) {
      i64 c = counts[pair_index(d.v, a, b)];
      if (c != counts[0]) {
        rep.witness = "pair {" + std::to_string(a) + "," + std::to_string(b) +
                      "} lies in " + std::to_string(c) + " blocks, pair {0,1} in " +
                      std::to_string(counts[0]);
        return rep;
      }
    }
  rep.ok = true;
  rep.k = static_cast<i64>(k);
  rep.r = point_counts[0];
  rep.lambda = counts[0];
  rep.nontrivial = (2 < rep.k && rep.k < d.v);
  rep.fisher = (d.b() >= d.v);
  return rep;
}

namespace {

std::vector<int> apply_block(const std::vector<int>& blk, const Perm& g) {
  std::vector<int> img(blk.size());
  for (size_t i = 0; i < blk.size(); ++i) img[i] = g[blk[i]];
  std::sort(img.begin(), img.end());
  return img;
}

}  // namespace

bool flag_transitive(const Design& d, const PermGroup& g) {
  if (g.degree() != d.v) throw std::invalid_argument("group degree must equal the point count");
  // multiset of blocks with multiplicities
  std::map<std::vector<int>, i64> mult;
  for (const auto& blk : d.blocks) ++mult[blk];
  for (const Perm& gen : g.generators()) {
    std::map<std::vector<int>, i64> imgmult;
    for (const auto& [blk, m] : mult) imgmult[apply_block(blk, gen)] += m;
    if (imgmult != mult)
      throw std::invalid_argument("group does not preserve the block multiset");
  }
  // cheap necessary condition on the flag count
  mpz_class flags = mpz_class(d.b()) * static_cast<long>(d.blocks[0].size());
  if (g.order() % flags != 0) return false;

  // blocks must form one orbit
  std::set<std::vector<int>> orbit{d.blocks[0]};
  std::vector<std::vector<int>> frontier{d.blocks[0]};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& blk : frontier)
      for (const Perm& gen : g.generators()) {
        auto img = apply_block(blk, gen);
        if (orbit.insert(img).second) next.push_back(std::move(img));
      }
    frontier = std::move(next);
  }
  if (orbit.size() != mult.size()) return false;
  // multiplicities constant on an orbit
  for (const auto& [blk, m] : mult)
    if (m != mult.begin()->second) return false;

  // block stabilizer transitive on the block
  PermGroup stab = g.set_stabilizer(d.blocks[0]);
  auto orb0 = stab.orbit_of(d.blocks[0][0]);
  std::vector<int> blk0 = d.blocks[0];
  return std::includes(orb0.begin(), orb0.end(), blk0.begin(), blk0.end());
}

std::vector<PartitionSystem> invariant_partitions(const PermGroup& g) {
  std::vector<PartitionSystem> out;
  for (auto& sys : g.minimal_block_systems())
    out.push_back(PartitionSystem::make(g.degree(), sys));
  return out;
}

IntersectionProfile intersection_profile(const Design& d, const PartitionSystem& c) {
  if (c.v != d.v) throw std::invalid_argument("partition and design disagree on the point count");
  std::set<i64> sizes;
  for (const auto& blk : d.blocks)
    for (const auto& cls : c.classes) {
      size_t n = 0;
      for (int x : blk)
        if (std::binary_search(cls.begin(), cls.end(), x)) ++n;
      if (n) sizes.insert(static_cast<i64>(n));
    }
  IntersectionProfile prof;
  prof.sizes.assign(sizes.begin(), sizes.end());
  prof.hypothesis_c_ok = sizes.size() == 1 && *sizes.begin() >= 2;
  if (prof.hypothesis_c_ok) prof.ell = *sizes.begin();
  return prof;
}

Design inner_design(const Design& d, const PartitionSystem& c, int class_index) {
  const auto& cls = c.classes.at(class_index);
  // points relabelled by position within the class
  std::vector<std::vector<int>> blocks;
  for (const auto& blk : d.blocks) {
    std::vector<int> trace;
    for (int x : blk) {
      auto it = std::lower_bound(cls.begin(), cls.end(), x);
      if (it != cls.end() && *it == x)
        trace.push_back(static_cast<int>(it - cls.begin()));
    }
    if (!trace.empty()) blocks.push_back(std::move(trace));
  }
  return Design::make(static_cast<int>(cls.size()), std::move(blocks));
}

Design quotient_design(const Design& d, const PartitionSystem& c) {
  std::vector<std::vector<int>> blocks;
  for (const auto& blk : d.blocks) {
    std::set<int> classes;
    for (int x : blk) classes.insert(c.class_of(x));
    blocks.emplace_back(classes.begin(), classes.end());
  }
  return Design::make(c.d(), std::move(blocks));
}

OrbitDesignResult orbit_design_check(const PermGroup& g, const std::vector<int>& block,
                                     i64 lambda_target) {
  if (!g.is_transitive())
    throw std::invalid_argument("orbit design check needs a transitive group");
  std::vector<int> b0 = block;
  std::sort(b0.begin(), b0.end());

  std::set<std::vector<int>> orbit{b0};
  std::vector<std::vector<int>> frontier{b0};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& blk : frontier)
      for (const Perm& gen : g.generators()) {
        auto img = apply_block(blk, gen);
        if (orbit.insert(img).second) next.push_back(std::move(img));
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> blocks(orbit.begin(), orbit.end());

  OrbitDesignResult res;
  res.orbit_length = static_cast<i64>(blocks.size());

  // pair counts via orbit representatives of the point stabilizer of 0
  PermGroup galpha = g.point_stabilizer_prefix(1);
  std::vector<std::vector<int>> reps_orbits = galpha.orbits();
  const int alpha = 0;
  for (const auto& orb : reps_orbits) {
    int beta = orb[0] == alpha ? (orb.size() > 1 ? orb[1] : -1) : orb[0];
    if (orb[0] == alpha && orb.size() == 1) continue;
    if (beta < 0) continue;
    i64 count = 0;
    for (const auto& blk : blocks)
      if (std::binary_search(blk.begin(), blk.end(), alpha) &&
          std::binary_search(blk.begin(), blk.end(), beta))
        ++count;
    if (count != lambda_target) {
      res.witness_alpha = alpha;
      res.witness_beta = beta;
      res.witness_count = count;
      return res;
    }
  }
  res.is_design = true;
  res.design = Design::make(g.degree(), std::move(blocks));
  return res;
}

FixedPointSubdesign fixed_point_subdesign(const Design& d, const PermGroup& g,
                                          const PermGroup& p,
                                          const PartitionSystem* classes) {
  for (const Perm& gen : p.generators())
    if (!g.contains(gen))
      throw std::invalid_argument("p must be a subgroup of g");
  FixedPointSubdesign out;
  out.fixed_points = p.fixed_points();
  if (out.fixed_points.empty())
    throw std::invalid_argument("the subgroup fixes no point");
  std::vector<std::vector<int>> blocks;
  for (const auto& blk : d.blocks)
    if (std::includes(out.fixed_points.begin(), out.fixed_points.end(), blk.begin(),
                      blk.end()))
      blocks.push_back(blk);
  out.restriction = Design::make(d.v, std::move(blocks));
  if (classes) {
    for (const auto& cls : classes->classes) {
      i64 f = 0;
      for (int x : out.fixed_points)
        if (std::binary_search(cls.begin(), cls.end(), x)) ++f;
      out.f_per_class.push_back(f);
    }
  }
  if (!out.restriction.blocks.empty()) {
    // restrict the point set to the fixed points for verification
    std::vector<int> remap(d.v, -1);
    for (size_t i = 0; i < out.fixed_points.size(); ++i)
      remap[out.fixed_points[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> rblocks;
    for (const auto& blk : out.restriction.blocks) {
      std::vector<int> rb;
      for (int x : blk) rb.push_back(remap[x]);
      rblocks.push_back(std::move(rb));
    }
    Design rd = Design::make(static_cast<int>(out.fixed_points.size()), std::move(rblocks));
    if (rd.v >= 2) {
      out.report = verify_2_design(rd);
      out.complete_subdesign = out.report.ok;
    }
  }
  return out;
}

}  // namespace ftpi
