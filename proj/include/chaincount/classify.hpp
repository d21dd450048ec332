#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chaincount/group.hpp"

namespace chaincount {

// Cheap isomorphism invariants. Within the subgroup zoo this artifact
// handles (subgroups of S5 and of dihedral groups), the tuple separates
// every occurring type pairwise — a claim the fixture tests verify rather
// than assume.
struct GroupFingerprint {
  int order = 1;
  std::map<std::uint64_t, int> element_order_histogram;
  bool is_abelian = true;
  bool is_cyclic = true;
  int center_order = 1;
  int derived_subgroup_order = 1;

  bool operator==(const GroupFingerprint&) const = default;
};

GroupFingerprint fingerprint(const SubgroupHandle& h);

// Canonical labels: "C<n>" for cyclic, "V4", "S3", "S4", "A4", "A5", "S5",
// "D8".."D20" (dihedral, order = the number), "F20" (the Frobenius group of
// order 20, a.k.a. GA(1,5)). Synonyms collapse: C2xC2 -> "V4",
// S3xS2 -> "D12", D4 -> "V4", D6 -> "S3". Anything without a matching row
// returns "unclassified(order=N)" — never a wrong label.
std::string classify(const GroupFingerprint& fp);

// The fingerprint->label rows behind classify(), exposed so tests can check
// the table is ambiguity-free.
const std::vector<std::pair<GroupFingerprint, std::string>>& label_table();

}  // namespace chaincount
