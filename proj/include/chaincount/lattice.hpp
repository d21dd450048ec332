#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "chaincount/group.hpp"

namespace chaincount {

enum class SeedOrder { ascending, descending };

// The complete subgroup lattice of a parent group: every subgroup exactly
// once, as masks sorted by (order, mask), plus the covering relation.
// covered_by[i] lists the maximal subgroups of node i. The lattice owns its
// element table, so it is self-contained and immutable once built; handles
// issued by handle() point into the lattice and share its lifetime.
class SubgroupLattice {
 public:
  SubgroupLattice(ElementTable parent, std::vector<Bitmask> nodes);

  const ElementTable& parent() const { return table_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Bitmask& node_mask(int i) const { return nodes_[i]; }
  int node_order(int i) const { return orders_[i]; }
  SubgroupHandle handle(int i) const { return {&table_, nodes_[i]}; }

  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Strict inclusion node_mask(inner) < node_mask(outer).
  bool properly_contains(int outer, int inner) const;

  // Nodes covered by `node`: its maximal subgroups.
  const std::vector<int>& maximal_subgroups(int node) const {
    return covered_by_[node];
  }

  // All covering pairs as (child, parent), in deterministic order.
  std::vector<std::pair<int, int>> covering_pairs() const;

  // -1 when no node has this mask.
  int find_node(const Bitmask& mask) const;

 private:
  ElementTable table_;
  std::vector<Bitmask> nodes_;
  std::vector<int> orders_;
  std::vector<std::vector<int>> covered_by_;
  std::unordered_map<Bitmask, int, BitmaskHash> index_;
  int bottom_ = 0;
  int top_ = 0;
  // Inclusion is a plain mask-subset test up to 256 nodes; above that a
  // precomputed bitmatrix row per node (bit j set iff node j <= node i).
  std::vector<Bitmask> contains_matrix_;

  void build_covering();
};

// Enumerates every subgroup of the parent: seed with all cyclic subgroups
// <x>, then repeatedly join existing nodes with single elements (<H u {x}>)
// until a fixpoint, deduplicating by mask. Completeness is a tested
// property, not an assumption (exhaustive subset oracle at small orders,
// two-seed agreement, conjugation stability). The seed order flips the
// element iteration direction so a second run can serve as an independent
// agreement check; the final node set is sorted either way.
// Takes the table by value: the returned lattice owns it.
// Throws cap_error when parent.order() > cap.
SubgroupLattice enumerate_subgroups(ElementTable parent, int cap = 720,
                                    SeedOrder seed = SeedOrder::ascending);

}  // namespace chaincount
