#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "chaincount/bitmask.hpp"
#include "chaincount/perm.hpp"

namespace chaincount {

// A fully closed group as an indexed element list with constant-time
// multiplication. elements[0] is the identity; the remaining order is the
// breadth-first discovery order from the sorted generator list, so indices,
// masks and every downstream export are bit-stable across runs.
// Immutable after construction; safe to share across threads.
class ElementTable {
 public:
  ElementTable(int degree, std::vector<Permutation> elements);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }

  const Permutation& element(int i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }

  int mul(int a, int b) const { return mul_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }

  // -1 when the permutation is not a member.
  int index_of(const Permutation& p) const;

  // Least k >= 1 with element^k = identity.
  int element_order(int a) const;

 private:
  int degree_;
  int order_;
  std::vector<Permutation> elements_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> inv_;
  std::unordered_map<std::string, int> index_;  // packed image bytes -> index
};

// Closes a generating set under composition via breadth-first word
// enumeration. Deterministic: generators are sorted and deduplicated before
// the walk. Throws cap_error when the closure would exceed cap — an error,
// never a truncation. Throws parse_error on mixed degrees or empty input
// (degree would be undefined).
ElementTable close_generators(std::vector<Permutation> generators,
                              int cap = 10000);

// A subgroup of a parent table, identified by its membership bitmask.
// Immutable value; the parent must outlive it.
struct SubgroupHandle {
  const ElementTable* parent = nullptr;
  Bitmask mask;

  int order() const { return static_cast<int>(mask.count()); }
  bool contains(int i) const { return mask.test(i); }
};

// Smallest subgroup containing the given element indices (and the identity).
SubgroupHandle subgroup_from_generators(const ElementTable& parent,
                                        const std::vector<int>& gen_indices);

SubgroupHandle trivial_subgroup(const ElementTable& parent);
SubgroupHandle full_subgroup(const ElementTable& parent);

// Bitwise AND of masks; the intersection of two subgroups is already closed.
// Throws parse_error on parent mismatch.
SubgroupHandle intersect(const SubgroupHandle& a, const SubgroupHandle& b);

// { g x g^-1 : x in h }. Order is preserved.
SubgroupHandle conjugate(const SubgroupHandle& h, int g);

// Exhaustive closure check: every pairwise product stays inside the mask and
// the identity is present. Cheap at this repo's orders; used by tests and
// the lattice builder's self-checks.
bool is_subgroup_mask(const ElementTable& parent, const Bitmask& mask);

// Deterministic minimal-ish generating set: greedily extend by the smallest
// element index not yet generated. Trivial subgroup -> empty list.
std::vector<int> generator_indices(const SubgroupHandle& h);

enum class Family { symmetric, alternating, cyclic, dihedral };

// Standard realizations:
//   symmetric n   (n <= 6):  <(1,2), (1,2,...,n)> on n points
//   alternating n (n <= 6):  <(1,2,3), (1,2,4), ..., (1,2,n)> on n points
//   cyclic n      (n <= 200):  <(1,2,...,n)> on n points
//   dihedral m    (m = 2n even, m <= 200): n-cycle plus the reversal
//                 reflection on n points. The degenerate orders get the
//                 smallest faithful stand-ins: order 2 -> <(1,2)>, order 4 ->
//                 <(1,2),(3,4)> (the Klein group, which *is* the order-4
//                 dihedral group).
// For cyclic/dihedral the parameter is the group order; for
// symmetric/alternating it is the number of points. Out-of-cap parameters
// throw parse_error.
ElementTable named_group(Family family, int n);

}  // namespace chaincount
