#include "chaincount/export.hpp"

#include <algorithm>

#include "chaincount/classify.hpp"
#include "chaincount/errors.hpp"

namespace chaincount {

Json bigint_to_json(const BigInt& v) {
  static const BigInt kJsonSafeMax = (BigInt(1) << 53) - 1;
  if (v >= -kJsonSafeMax && v <= kJsonSafeMax)
    return static_cast<std::int64_t>(v);
  return v.str();
}

namespace {

std::vector<std::string> generator_strings(const SubgroupHandle& h) {
  std::vector<std::string> out;
  for (int g : generator_indices(h))
    out.push_back(format_cycles(h.parent->element(g)));
  return out;
}

}  // namespace

Json lattice_to_json(const SubgroupLattice& lattice) {
  const ElementTable& table = lattice.parent();
  Json doc;
  doc["group"] = {
      {"degree", table.degree()},
      {"order", table.order()},
      {"generators", generator_strings(full_subgroup(table))},
  };
  Json nodes = Json::array();
  for (int i = 0; i < lattice.node_count(); ++i) {
    SubgroupHandle h = lattice.handle(i);
    nodes.push_back({
        {"id", i},
        {"order", lattice.node_order(i)},
        {"label", classify(fingerprint(h))},
        {"generators", generator_strings(h)},
    });
  }
  doc["nodes"] = std::move(nodes);
  Json covers = Json::array();
  for (auto [child, parent] : lattice.covering_pairs())
    covers.push_back({child, parent});
  doc["covers"] = std::move(covers);
  doc["maximal_of_top"] = lattice.maximal_subgroups(lattice.top());
  return doc;
}

SubgroupLattice lattice_from_json(const Json& doc) {
  if (!doc.contains("group") || !doc.contains("nodes") ||
      !doc.contains("covers"))
    throw parse_error("lattice document: missing group/nodes/covers");

  const Json& group = doc["group"];
  int degree = group.at("degree").get<int>();
  std::vector<Permutation> gens;
  for (const auto& s : group.at("generators"))
    gens.push_back(parse_permutation(s.get<std::string>(), degree));
  if (gens.empty()) gens.emplace_back(degree);

  ElementTable table = close_generators(std::move(gens));
  if (table.order() != group.at("order").get<int>())
    throw parse_error("lattice document: group order does not match");

  std::vector<Bitmask> masks;
  for (const auto& node : doc.at("nodes")) {
    std::vector<int> idx;
    for (const auto& s : node.at("generators")) {
      Permutation p = parse_permutation(s.get<std::string>(), degree);
      int i = table.index_of(p);
      if (i < 0)
        throw parse_error("lattice document: generator not in group");
      idx.push_back(i);
    }
    SubgroupHandle h = subgroup_from_generators(table, idx);
    if (h.order() != node.at("order").get<int>())
      throw parse_error("lattice document: node order does not match");
    masks.push_back(std::move(h.mask));
  }

  SubgroupLattice lattice(std::move(table), std::move(masks));
  if (lattice.covering_pairs().size() != doc.at("covers").size())
    throw parse_error("lattice document: covering relation does not match");
  return lattice;
}

std::string lattice_to_csv(const SubgroupLattice& lattice) {
  std::string out = "id,order,label,generators\n";
  for (int i = 0; i < lattice.node_count(); ++i) {
    SubgroupHandle h = lattice.handle(i);
    std::string gens;
    for (const auto& s : generator_strings(h)) {
      if (!gens.empty()) gens += ' ';
      gens += s;
    }
    out += std::to_string(i) + ',' + std::to_string(lattice.node_order(i)) +
           ',' + classify(fingerprint(h)) + ",\"" + gens + "\"\n";
  }
  return out;
}

}  // namespace chaincount
