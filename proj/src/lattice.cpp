#include "chaincount/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "chaincount/errors.hpp"

namespace chaincount {

SubgroupLattice::SubgroupLattice(ElementTable parent,
                                 std::vector<Bitmask> nodes)
    : table_(std::move(parent)), nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end(),
            [](const Bitmask& a, const Bitmask& b) {
              if (a.count() != b.count()) return a.count() < b.count();
              return a < b;
            });
  orders_.resize(nodes_.size());
  index_.reserve(nodes_.size() * 2);
  for (int i = 0; i < node_count(); ++i) {
    orders_[i] = static_cast<int>(nodes_[i].count());
    if (!index_.emplace(nodes_[i], i).second)
      throw parse_error("lattice: duplicate node mask");
  }
  bottom_ = 0;
  top_ = node_count() - 1;
  if (orders_[bottom_] != 1 || orders_[top_] != table_.order())
    throw parse_error("lattice: missing bottom or top node");

  if (node_count() > 256) {
    contains_matrix_.assign(node_count(), Bitmask(node_count()));
    for (int i = 0; i < node_count(); ++i)
      for (int j = 0; j < node_count(); ++j)
        if (orders_[j] < orders_[i] && orders_[i] % orders_[j] == 0 &&
            nodes_[j].subset_of(nodes_[i]))
          contains_matrix_[i].set(j);
  }
  build_covering();
}

bool SubgroupLattice::properly_contains(int outer, int inner) const {
  if (orders_[inner] >= orders_[outer]) return false;
  if (!contains_matrix_.empty()) return contains_matrix_[outer].test(inner);
  return orders_[outer] % orders_[inner] == 0 &&
         nodes_[inner].subset_of(nodes_[outer]);
}

void SubgroupLattice::build_covering() {
  // Order-stratified scan: the nodes covered by y are the maximal elements
  // of y's proper subgroup set. Nodes are sorted by order ascending, so a
  // descending sweep finds maximal members first.
  covered_by_.assign(node_count(), {});
  std::vector<int> subs;
  for (int y = 0; y < node_count(); ++y) {
    subs.clear();
    for (int x = y - 1; x >= 0; --x)
      if (properly_contains(y, x)) subs.push_back(x);  // order descending
    for (std::size_t i = 0; i < subs.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < i && !dominated; ++j)
        dominated = properly_contains(subs[j], subs[i]);
      if (!dominated) covered_by_[y].push_back(subs[i]);
    }
    std::sort(covered_by_[y].begin(), covered_by_[y].end());
  }
}

std::vector<std::pair<int, int>> SubgroupLattice::covering_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  for (int y = 0; y < node_count(); ++y)
    for (int x : covered_by_[y]) pairs.emplace_back(x, y);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

int SubgroupLattice::find_node(const Bitmask& mask) const {
  auto it = index_.find(mask);
  return it == index_.end() ? -1 : it->second;
}

SubgroupLattice enumerate_subgroups(ElementTable parent, int cap,
                                    SeedOrder seed) {
  if (parent.order() > cap)
    throw cap_error("enumerate_subgroups: parent order " +
                    std::to_string(parent.order()) + " exceeds cap " +
                    std::to_string(cap));

  const int order = parent.order();
  std::vector<int> element_sweep(order);
  for (int i = 0; i < order; ++i)
    element_sweep[i] = seed == SeedOrder::ascending ? i : order - 1 - i;

  // Cyclic seeds. Every element also gets tagged with the id of the cyclic
  // subgroup it generates so joins can skip generators of an already-joined
  // cyclic subgroup.
  std::unordered_set<Bitmask, BitmaskHash> node_set;
  std::vector<Bitmask> nodes;
  std::vector<int> cyclic_id(order, -1);
  std::vector<Bitmask> cyclic_masks;
  auto add_node = [&](const Bitmask& m) {
    if (node_set.insert(m).second) {
      nodes.push_back(m);
      return true;
    }
    return false;
  };

  {
    std::unordered_map<Bitmask, int, BitmaskHash> cyclic_index;
    for (int x : element_sweep) {
      Bitmask m(order);
      int y = x;
      m.set(0);
      while (y != 0) {
        m.set(y);
        y = parent.mul(y, x);
      }
      auto [it, inserted] =
          cyclic_index.emplace(m, static_cast<int>(cyclic_masks.size()));
      if (inserted) cyclic_masks.push_back(m);
      cyclic_id[x] = it->second;
      add_node(m);
    }
  }

  // Join closure: extend every known node by one generator at a time until
  // no join produces a new subgroup.
  std::vector<Bitmask> frontier = nodes;
  while (!frontier.empty()) {
    std::vector<Bitmask> next;
    for (const Bitmask& h : frontier) {
      std::vector<char> joined(cyclic_masks.size(), 0);
      for (int x : element_sweep) {
        if (h.test(x)) continue;
        if (joined[cyclic_id[x]]) continue;
        joined[cyclic_id[x]] = 1;
        Bitmask m = h;
        std::vector<int> members = m.bits();
        m.set(x);
        members.push_back(x);
        // closure of h u {x}: h is already closed, so only x is new work
        {
          std::vector<int> work{x};
          std::size_t wi = 0;
          while (wi < work.size()) {
            int a = work[wi++];
            for (std::size_t mi = 0; mi < members.size(); ++mi) {
              int b = members[mi];
              for (int c : {parent.mul(a, b), parent.mul(b, a)}) {
                if (!m.test(c)) {
                  m.set(c);
                  members.push_back(c);
                  work.push_back(c);
                }
              }
            }
          }
        }
        if (add_node(m)) next.push_back(m);
      }
    }
    frontier = std::move(next);
  }

  return SubgroupLattice(std::move(parent), std::move(nodes));
}

}  // namespace chaincount
