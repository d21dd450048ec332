#include "chaincount/group.hpp"

#include <algorithm>
#include <deque>

#include "chaincount/errors.hpp"

namespace chaincount {

namespace {

std::string pack_images(const Permutation& p) {
  std::string key;
  key.reserve(p.degree() * 2);
  for (int i = 0; i < p.degree(); ++i) {
    key += static_cast<char>(p[i] & 0xff);
    key += static_cast<char>((p[i] >> 8) & 0xff);
  }
  return key;
}

}  // namespace

ElementTable::ElementTable(int degree, std::vector<Permutation> elements)
    : degree_(degree),
      order_(static_cast<int>(elements.size())),
      elements_(std::move(elements)) {
  index_.reserve(order_ * 2);
  for (int i = 0; i < order_; ++i) {
    if (elements_[i].degree() != degree_)
      throw parse_error("element table: mixed degrees");
    index_.emplace(pack_images(elements_[i]), i);
  }
  if (static_cast<int>(index_.size()) != order_)
    throw parse_error("element table: duplicate elements");
  if (!elements_[0].is_identity())
    throw parse_error("element table: elements[0] must be the identity");

  mul_.resize(static_cast<std::size_t>(order_) * order_);
  inv_.resize(order_);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      Permutation prod = chaincount::compose(elements_[a], elements_[b]);
      auto it = index_.find(pack_images(prod));
      if (it == index_.end())
        throw parse_error("element table: not closed under composition");
      mul_[static_cast<std::size_t>(a) * order_ + b] =
          static_cast<std::uint16_t>(it->second);
      if (it->second == 0) inv_[a] = static_cast<std::uint16_t>(b);
    }
  }
}

int ElementTable::index_of(const Permutation& p) const {
  if (p.degree() != degree_) return -1;
  auto it = index_.find(pack_images(p));
  return it == index_.end() ? -1 : it->second;
}

int ElementTable::element_order(int a) const {
  int k = 1;
  int x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

ElementTable close_generators(std::vector<Permutation> generators, int cap) {
  if (generators.empty())
    throw parse_error("close_generators: no generators (degree undefined)");
  int degree = generators[0].degree();
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw parse_error("close_generators: mixed generator degrees");

  // Sorted, deduplicated, identity dropped: the walk below is then a pure
  // function of the generator *set*.
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  std::erase_if(generators, [](const Permutation& p) {
    return p.is_identity();
  });

  std::vector<Permutation> elements;
  elements.emplace_back(degree);
  std::unordered_map<std::string, int> seen;
  seen.emplace(pack_images(elements[0]), 0);

  std::deque<int> queue;
  queue.push_back(0);
  while (!queue.empty()) {
    int at = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation next = compose(g, elements[at]);
      std::string key = pack_images(next);
      if (seen.emplace(key, static_cast<int>(elements.size())).second) {
        if (static_cast<int>(elements.size()) >= cap)
          throw cap_error("close_generators: closure exceeds cap " +
                          std::to_string(cap));
        queue.push_back(static_cast<int>(elements.size()));
        elements.push_back(std::move(next));
      }
    }
  }
  return ElementTable(degree, std::move(elements));
}

SubgroupHandle trivial_subgroup(const ElementTable& parent) {
  Bitmask m(parent.order());
  m.set(0);
  return {&parent, std::move(m)};
}

SubgroupHandle full_subgroup(const ElementTable& parent) {
  Bitmask m(parent.order());
  for (int i = 0; i < parent.order(); ++i) m.set(i);
  return {&parent, std::move(m)};
}

namespace {

// Closure inside a parent: worklist over new members only. Seeds already
// known to be mutually closed (a subgroup mask) may be passed in `mask`
// with only the genuinely new indices in `work`.
void close_mask_in_place(const ElementTable& parent, Bitmask& mask,
                         std::vector<int>& members, std::vector<int> work) {
  std::size_t wi = 0;
  while (wi < work.size()) {
    int a = work[wi++];
    for (std::size_t mi = 0; mi < members.size(); ++mi) {
      int b = members[mi];
      for (int c : {parent.mul(a, b), parent.mul(b, a)}) {
        if (!mask.test(c)) {
          mask.set(c);
          members.push_back(c);
          work.push_back(c);
        }
      }
    }
  }
}

}  // namespace

SubgroupHandle subgroup_from_generators(const ElementTable& parent,
                                        const std::vector<int>& gen_indices) {
  Bitmask mask(parent.order());
  mask.set(0);
  std::vector<int> members{0};
  std::vector<int> work;
  for (int g : gen_indices) {
    if (g < 0 || g >= parent.order())
      throw parse_error("subgroup_from_generators: index out of range");
    if (!mask.test(g)) {
      mask.set(g);
      members.push_back(g);
      work.push_back(g);
    }
  }
  close_mask_in_place(parent, mask, members, std::move(work));
  return {&parent, std::move(mask)};
}

SubgroupHandle intersect(const SubgroupHandle& a, const SubgroupHandle& b) {
  if (a.parent != b.parent)
    throw parse_error("intersect: handles have different parents");
  return {a.parent, a.mask & b.mask};
}

SubgroupHandle conjugate(const SubgroupHandle& h, int g) {
  const ElementTable& t = *h.parent;
  Bitmask out(t.order());
  int ginv = t.inv(g);
  for (int x : h.mask.bits()) out.set(t.mul(t.mul(g, x), ginv));
  return {h.parent, std::move(out)};
}

bool is_subgroup_mask(const ElementTable& parent, const Bitmask& mask) {
  if (!mask.test(0)) return false;
  auto members = mask.bits();
  for (int a : members)
    for (int b : members)
      if (!mask.test(parent.mul(a, b))) return false;
  return true;
}

std::vector<int> generator_indices(const SubgroupHandle& h) {
  std::vector<int> gens;
  SubgroupHandle closed = trivial_subgroup(*h.parent);
  while (closed.mask != h.mask) {
    int next = -1;
    for (int i : h.mask.bits()) {
      if (!closed.mask.test(i)) {
        next = i;
        break;
      }
    }
    gens.push_back(next);
    closed = subgroup_from_generators(*h.parent, gens);
  }
  return gens;
}

namespace {

ElementTable cyclic_group(int n) {
  if (n == 1) return ElementTable(1, {Permutation(1)});
  std::vector<std::uint16_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint16_t>((i + 1) % n);
  return close_generators({Permutation(n, std::move(img))}, n + 1);
}

ElementTable dihedral_group(int order) {
  if (order % 2 != 0 || order < 2)
    throw parse_error("dihedral order must be even and >= 2");
  int n = order / 2;
  if (n == 1)
    return close_generators({parse_permutation("(1,2)", 2)}, 3);
  if (n == 2)
    return close_generators({parse_permutation("(1,2)", 4),
                             parse_permutation("(3,4)", 4)},
                            5);
  std::vector<std::uint16_t> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint16_t>((i + 1) % n);
    refl[i] = static_cast<std::uint16_t>(n - 1 - i);
  }
  return close_generators(
      {Permutation(n, std::move(rot)), Permutation(n, std::move(refl))},
      order + 1);
}

ElementTable symmetric_group(int n) {
  if (n == 1) return ElementTable(1, {Permutation(1)});
  std::vector<Permutation> gens;
  gens.push_back(parse_permutation("(1,2)", n));
  if (n > 2) {
    std::vector<std::uint16_t> img(n);
    for (int i = 0; i < n; ++i)
      img[i] = static_cast<std::uint16_t>((i + 1) % n);
    gens.push_back(Permutation(n, std::move(img)));
  }
  int cap = 1;
  for (int i = 2; i <= n; ++i) cap *= i;
  return close_generators(std::move(gens), cap + 1);
}

ElementTable alternating_group(int n) {
  if (n <= 2) return ElementTable(std::max(n, 1), {Permutation(std::max(n, 1))});
  std::vector<Permutation> gens;
  for (int k = 3; k <= n; ++k)
    gens.push_back(
        parse_permutation("(1,2," + std::to_string(k) + ")", n));
  int cap = 1;
  for (int i = 3; i <= n; ++i) cap *= i;
  return close_generators(std::move(gens), cap + 1);
}

}  // namespace

ElementTable named_group(Family family, int n) {
  switch (family) {
    case Family::symmetric:
      if (n < 1 || n > 6)
        throw parse_error("symmetric group supported for 1 <= n <= 6");
      return symmetric_group(n);
    case Family::alternating:
      if (n < 1 || n > 6)
        throw parse_error("alternating group supported for 1 <= n <= 6");
      return alternating_group(n);
    case Family::cyclic:
      if (n < 1 || n > 200)
        throw parse_error("cyclic group supported for order 1..200");
      return cyclic_group(n);
    case Family::dihedral:
      if (n < 2 || n > 200 || n % 2 != 0)
        throw parse_error("dihedral group supported for even order 2..200");
      return dihedral_group(n);
  }
  throw parse_error("unknown family");
}

}  // namespace chaincount
