#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ftpi/group.hpp"

namespace ftpi {

// Incidence structure: v points, blocks as sorted point lists. Repeated
// blocks are meaningful (stored as repeated entries); the block list itself
// is kept sorted so equal designs compare equal.
struct Design {
  int v = 0;
  std::vector<std::vector<int>> blocks;

  static Design make(int v, std::vector<std::vector<int>> blocks);
  int b() const { return static_cast<int>(blocks.size()); }
  bool operator==(const Design&) const = default;
};

// partition of {0..v-1} into d classes of size c, classes sorted by minimal
// element
struct PartitionSystem {
  int v = 0;
  std::vector<std::vector<int>> classes;

  static PartitionSystem make(int v, std::vector<std::vector<int>> classes);
  int c() const { return classes.empty() ? 0 : static_cast<int>(classes[0].size()); }
  int d() const { return static_cast<int>(classes.size()); }
  int class_of(int point) const;
};

struct DesignReport {
  bool ok = false;
  i64 k = 0, r = 0, lambda = 0;
  bool nontrivial = false;  // 2 < k < v
  bool fisher = false;      // b >= v
  std::string witness;      // first offending point/pair on failure
};

// exact pair-count verification; the OpenMP kernel and the serial reference
// produce identical counts (checked in tests and raced in the benchmark)
std::vector<i64> pair_counts_serial(const Design& d);
std::vector<i64> pair_counts_parallel(const Design& d);

DesignReport verify_2_design(const Design& d);

// G preserves the block multiset, blocks form one orbit, and a block
// stabilizer is transitive on the block. Throws if G does not preserve the
// design.
bool flag_transitive(const Design& d, const PermGroup& g);

std::vector<PartitionSystem> invariant_partitions(const PermGroup& g);

struct IntersectionProfile {
  std::vector<i64> sizes;  // distinct nonempty |B ∩ class| values, sorted
  bool hypothesis_c_ok = false;
  i64 ell = 0;
};
IntersectionProfile intersection_profile(const Design& d, const PartitionSystem& c);

// trace structure on one class / class structure on the partition, with
// multiplicities kept as repeated blocks
Design inner_design(const Design& d, const PartitionSystem& c, int class_index);
Design quotient_design(const Design& d, const PartitionSystem& c);

struct OrbitDesignResult {
  bool is_design = false;
  Design design;           // filled when is_design
  int witness_alpha = -1;  // else the failing pair and its count
  int witness_beta = -1;
  i64 witness_count = 0;
  i64 orbit_length = 0;
};

// forms the orbit of `block` under G and tests the 2-design property at
// lambda_target by counting over G_alpha orbit representatives (alpha = 0)
OrbitDesignResult orbit_design_check(const PermGroup& g, const std::vector<int>& block,
                                     i64 lambda_target);

struct FixedPointSubdesign {
  Design restriction;               // fixed points of P, fully contained blocks
  std::vector<int> fixed_points;    // of P
  bool complete_subdesign = false;  // nonempty block set and verifies as 2-design
  DesignReport report;
  std::vector<i64> f_per_class;     // |fix ∩ class|, when a partition is given
};
FixedPointSubdesign fixed_point_subdesign(const Design& d, const PermGroup& g,
                                          const PermGroup& p,
                                          const PartitionSystem* classes = nullptr);

}  // namespace ftpi
