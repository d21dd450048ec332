#include "chaincount/classify.hpp"

namespace chaincount {

GroupFingerprint fingerprint(const SubgroupHandle& h) {
  const ElementTable& t = *h.parent;
  std::vector<int> members = h.mask.bits();

  GroupFingerprint fp;
  fp.order = static_cast<int>(members.size());

  for (int a : members) fp.element_order_histogram[t.element_order(a)]++;
  fp.is_cyclic =
      fp.element_order_histogram.count(fp.order) > 0 || fp.order == 1;

  int center = 0;
  for (int a : members) {
    bool central = true;
    for (int b : members) {
      if (t.mul(a, b) != t.mul(b, a)) {
        central = false;
        break;
      }
    }
    if (central) ++center;
  }
  fp.center_order = center;
  fp.is_abelian = center == fp.order;

  std::vector<int> commutators;
  for (int a : members)
    for (int b : members) {
      int c = t.mul(t.mul(t.inv(a), t.inv(b)), t.mul(a, b));
      if (c != 0) commutators.push_back(c);
    }
  fp.derived_subgroup_order =
      subgroup_from_generators(t, commutators).order();
  return fp;
}

namespace {

std::vector<std::pair<GroupFingerprint, std::string>> build_label_table() {
  std::vector<std::pair<GroupFingerprint, std::string>> rows;
  auto add_whole = [&](const ElementTable& g, const std::string& label) {
    rows.emplace_back(fingerprint(full_subgroup(g)), label);
  };

  // The non-cyclic types that occur as subgroups of S5 (cyclic groups are
  // matched by rule, not by row). V4 doubles as the order-4 dihedral group
  // and S3 as the order-6 one; S3xS2 is the order-12 dihedral group, so a
  // single D12 row covers both names.
  add_whole(named_group(Family::dihedral, 4), "V4");
  add_whole(named_group(Family::symmetric, 3), "S3");
  add_whole(named_group(Family::symmetric, 4), "S4");
  add_whole(named_group(Family::symmetric, 5), "S5");
  add_whole(named_group(Family::alternating, 4), "A4");
  add_whole(named_group(Family::alternating, 5), "A5");
  for (int order = 8; order <= 20; order += 2)
    add_whole(named_group(Family::dihedral, order),
              "D" + std::to_string(order));
  // Frobenius group of order 20 = GA(1,5), the normalizer of a 5-cycle.
  {
    ElementTable f20 = close_generators({parse_permutation("(1,2,3,4,5)", 5),
                                         parse_permutation("(2,3,5,4)", 5)});
    add_whole(f20, "F20");
  }
  return rows;
}

}  // namespace

const std::vector<std::pair<GroupFingerprint, std::string>>& label_table() {
  static const auto rows = build_label_table();
  return rows;
}

std::string classify(const GroupFingerprint& fp) {
  if (fp.is_cyclic) return "C" + std::to_string(fp.order);
  for (const auto& [row, label] : label_table())
    if (row == fp) return label;
  return "unclassified(order=" + std::to_string(fp.order) + ")";
}

}  // namespace chaincount
