#pragma once

#include <memory>
#include <vector>

#include "ftpi/arith.hpp"
#include "ftpi/group.hpp"

namespace ftpi {

// One conjugacy class of subgroups of a fixed parent group.
struct SubgroupClass {
  PermGroup representative;
  i64 rep_order = 1;
  i64 parent_order = 1;
  i64 index = 1;
  i64 class_size = 1;                 // number of conjugates
  std::vector<int> orbit_sizes;       // sorted orbit sizes of the representative
};

// Complete subgroup lattice of a group of order <= bound, up to conjugacy.
// Built layer by layer by prime-order cyclic extension; perfect subgroups
// (unreachable by extension) are completed by closing the class list under
// joins with prime-power cyclic subgroups, which is exhaustive since every
// subgroup is generated by its prime-power cyclic subgroups.
class SubgroupLattice {
 public:
  static std::shared_ptr<const SubgroupLattice> of(const PermGroup& g, i64 bound);

  const std::vector<SubgroupClass>& classes() const { return classes_; }
  i64 parent_order() const { return parent_order_; }

 private:
  std::vector<SubgroupClass> classes_;
  i64 parent_order_ = 1;
};

// All subgroup classes (sorted by (order, representative element list)).
// Throws bound_exceeded if |G| > max_parent_order.
std::vector<SubgroupClass> subgroup_classes(const PermGroup& g, i64 max_parent_order);

// Classes whose index divides m (or equals m when exact_index) and whose
// representative has an orbit of size s on the natural points.
std::vector<SubgroupClass> subgroups_with_orbit(const PermGroup& g, i64 m, int s,
                                                bool exact_index, i64 max_parent_order);

// Orbit-stabilizer escape hatch for A_d / S_d: a subgroup with an s-orbit
// lies in the stabilizer of that s-set, so its index is a multiple of
// binomial(d,s). True means no subgroup of index dividing m with an s-orbit
// can exist.
bool alternating_shortcut(i64 d, i64 s, i64 m);

// Sylow p-subgroup by cyclic extension restricted to p-subgroups (normalizer
// ascent until the full p-part is reached).
PermGroup sylow_subgroup(const PermGroup& g, i64 p, i64 max_parent_order);

}  // namespace ftpi
