#pragma once

#include <gmpxx.h>

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "ftpi/perm.hpp"

namespace ftpi {

// Stabilizer chain (base, strong generators, fundamental-orbit transversals)
// built by a deterministic Schreier-Sims. The base starts with an optional
// prescribed prefix; further base points are the smallest point moved by the
// offending residue, so chains are reproducible across runs and platforms.
struct StabChain {
  int degree = 0;
  std::vector<int> base;
  std::vector<Perm> strong_gens;
  // per level: fundamental orbit (BFS order), transversal reps aligned with
  // the orbit (rep maps base[i] to the orbit point), and point -> orbit slot
  std::vector<std::vector<int>> orbit;
  std::vector<std::vector<Perm>> transversal;
  std::vector<std::vector<int>> slot;  // -1 if not in orbit

  mpz_class order() const;
  bool contains(const Perm& g) const;
  // residue after sifting and the level reached
  std::pair<Perm, size_t> sift(const Perm& g) const;
  std::vector<Perm> level_gens(size_t level) const;  // gens fixing base[0..level-1]
};

StabChain build_chain(int degree, const std::vector<Perm>& gens,
                      const std::vector<int>& base_prefix = {});

class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const StabChain& chain() const;

  mpz_class order() const { return chain().order(); }
  // order as int64 when it fits, for enumeration bounds
  std::optional<long long> order_i64() const;
  bool contains(const Perm& g) const { return chain().contains(g); }
  bool is_trivial() const;

  std::vector<int> orbit_of(int point) const;
  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const;

  // stabilizer of the first `prefix` natural points 0..prefix-1
  PermGroup point_stabilizer_prefix(int prefix) const;

  // largest t with G transitive, G_0 transitive on the rest, ... (0 if
  // intransitive). bounded_t > 0 stops once t >= bounded_t.
  int transitivity_degree(int bounded_t = 0) const;

  // all minimal nontrivial block systems; empty iff primitive (transitive G)
  std::vector<std::vector<std::vector<int>>> minimal_block_systems() const;
  bool is_primitive() const;

  std::vector<int> fixed_points() const;

  PermGroup set_stabilizer(const std::vector<int>& set) const;
  PermGroup derived_subgroup() const;

  // deterministic element enumeration (BFS over generators); throws if the
  // order exceeds `bound`
  std::vector<Perm> elements(long long bound) const;

 private:
  int degree_ = 0;
  std::vector<Perm> gens_;
  mutable std::shared_ptr<const StabChain> chain_;  // sealed, built once
};

// Transitive action of G on the right cosets of H; point 0 is the coset H.
// `map` pushes arbitrary members of G (e.g. subgroup generators) through the
// action.
struct CosetAction {
  PermGroup image;
  std::function<Perm(const Perm&)> map;
};
CosetAction coset_action(const PermGroup& g, const PermGroup& h,
                         long long max_degree = 100000);

// Normalizer of H in G by element scan; requires |G| <= scan_bound.
PermGroup normalizer(const PermGroup& g, const PermGroup& h, long long scan_bound);

struct bound_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ftpi
