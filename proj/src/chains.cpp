#include "chaincount/chains.hpp"

#include <algorithm>
#include <unordered_map>

#include "chaincount/errors.hpp"

namespace chaincount {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

ChainCounts chain_counts(const SubgroupLattice& lattice) {
  const int n = lattice.node_count();
  ChainCounts out;
  out.per_node_h.resize(n);
  out.per_node_g.resize(n);

  // Nodes are sorted by order, so every proper subgroup of node i sits at a
  // smaller index: one ascending sweep settles both DPs.
  for (int i = 0; i < n; ++i) {
    BigInt c = 1;
    for (int j = 0; j < i; ++j)
      if (lattice.properly_contains(i, j)) c += out.per_node_h[j];
    out.per_node_h[i] = std::move(c);

    if (i == lattice.bottom()) {
      out.per_node_g[i] = 1;
    } else {
      BigInt m = 0;
      for (int j : lattice.maximal_subgroups(i)) m += out.per_node_g[j];
      out.per_node_g[i] = std::move(m);
    }
  }
  out.h = out.per_node_h[lattice.top()];
  out.g = out.per_node_g[lattice.top()];
  return out;
}

BigInt count_chains_ending(const SubgroupLattice& lattice, int node) {
  return chain_counts(lattice).per_node_h.at(node);
}

BigInt count_maximal_chains(const SubgroupLattice& lattice, int node) {
  return chain_counts(lattice).per_node_g.at(node);
}

std::vector<std::pair<int, BigInt>> maximal_chain_decomposition(
    const SubgroupLattice& lattice) {
  ChainCounts counts = chain_counts(lattice);
  std::vector<std::pair<int, BigInt>> out;
  for (int m : lattice.maximal_subgroups(lattice.top()))
    out.emplace_back(m, counts.per_node_g[m]);
  return out;
}

std::pair<BigInt, InclusionExclusionBreakdown> h_by_inclusion_exclusion(
    const SubgroupLattice& lattice, int max_k) {
  InclusionExclusionBreakdown bd;
  const auto& maximals = lattice.maximal_subgroups(lattice.top());
  bd.k = static_cast<int>(maximals.size());
  if (bd.k == 0) {
    // Trivial group: the alternating-sum identity needs at least one
    // maximal subgroup; h is 1 by definition (the chain {G} alone).
    bd.total = 1;
    return {BigInt(1), bd};
  }
  if (bd.k > max_k)
    throw cap_error("inclusion-exclusion: " + std::to_string(bd.k) +
                    " maximal subgroups exceed subset bound " +
                    std::to_string(max_k));

  ChainCounts counts = chain_counts(lattice);
  std::unordered_map<Bitmask, BigInt, BitmaskHash> h_by_mask;
  auto h_of = [&](const Bitmask& m) -> const BigInt& {
    auto it = h_by_mask.find(m);
    if (it == h_by_mask.end()) {
      int node = lattice.find_node(m);
      // Intersections of subgroups are subgroups, so every one must already
      // be a node of the complete lattice.
      if (node < 0)
        throw disagreement_error(
            "inclusion-exclusion: intersection mask is not a lattice node");
      it = h_by_mask.emplace(m, counts.per_node_h[node]).first;
    }
    return it->second;
  };

  std::vector<Bitmask> masks;
  masks.reserve(maximals.size());
  for (int m : maximals) masks.push_back(lattice.node_mask(m));

  bd.c.resize(bd.k);
  bd.total = 0;
  bd.trivial_tail_rank = 0;

  // Rank-wise subset iteration, carrying prefix intersections down the
  // combination tree. Once a whole rank intersects to the trivial subgroup,
  // every deeper rank does too (supersets only shrink), and the remaining
  // terms collapse to binomial counts of h(trivial) = 1.
  for (int r = 1; r <= bd.k; ++r) {
    if (bd.trivial_tail_rank != 0) {
      bd.c[r - 1] = binomial(bd.k, r);
    } else {
      BigInt sum = 0;
      bool all_trivial = true;
      // choose(start..k-1, depth remaining) with running intersection
      auto descend = [&](auto&& self, int start, int remaining,
                         const Bitmask& inter) -> void {
        if (remaining == 0) {
          if (inter.count() > 1) all_trivial = false;
          sum += h_of(inter);
          return;
        }
        for (int i = start; i <= bd.k - remaining; ++i)
          self(self, i + 1, remaining - 1, inter & masks[i]);
      };
      Bitmask everything(lattice.parent().order());
      for (int i = 0; i < lattice.parent().order(); ++i) everything.set(i);
      descend(descend, 0, r, everything);
      if (all_trivial) bd.trivial_tail_rank = r;
      bd.c[r - 1] = std::move(sum);
    }
    if (r % 2 == 0) bd.c[r - 1] = -bd.c[r - 1];
    bd.total += bd.c[r - 1];
  }
  bd.total *= 2;
  return {bd.total, bd};
}

FactoredInteger FactoredInteger::of(std::uint64_t n) {
  if (n == 0) throw parse_error("factorization requires n >= 1");
  FactoredInteger out;
  out.n = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int m = 0;
      while (n % p == 0) {
        n /= p;
        ++m;
      }
      out.factors.emplace_back(p, m);
    }
  }
  if (n > 1) out.factors.emplace_back(n, 1);
  return out;
}

bool FactoredInteger::consistent() const {
  std::uint64_t prod = 1;
  std::uint64_t last = 1;
  for (auto [p, m] : factors) {
    if (p <= last || m < 1) return false;
    last = p;
    for (int i = 0; i < m; ++i) {
      if (prod > UINT64_MAX / p) return false;
      prod *= p;
    }
  }
  return prod == n;
}

BigInt g_cyclic_multinomial(const FactoredInteger& n) {
  if (!n.consistent())
    throw parse_error("g_cyclic_multinomial: invalid factorization");
  int total = 0;
  for (auto [p, m] : n.factors) total += m;
  BigInt result = 1;
  for (int i = 2; i <= total; ++i) result *= i;
  for (auto [p, m] : n.factors)
    for (int i = 2; i <= m; ++i) result /= i;
  return result;
}

BigInt h_dihedral_prime_power(std::uint64_t p, int m) {
  if (m < 1) throw parse_error("h_dihedral_prime_power: exponent must be >= 1");
  FactoredInteger f = FactoredInteger::of(p);
  if (f.factors.size() != 1 || f.factors[0].second != 1)
    throw parse_error("h_dihedral_prime_power: p must be prime");
  // 2^m/(p-1) * (p^(m+1) + p - 2)  ==  2^m * (1 + sum_{i=0..m} p^i),
  // which keeps everything in integers.
  BigInt geometric = 1;  // the extra +1
  BigInt power = 1;
  for (int i = 0; i <= m; ++i) {
    geometric += power;
    power *= p;
  }
  return (BigInt(1) << m) * geometric;
}

OracleCounts naive_chain_oracle(const SubgroupLattice& lattice,
                                std::uint64_t budget) {
  OracleCounts out{0, 0};
  std::uint64_t visits = 0;
  auto spend = [&] {
    if (++visits > budget)
      throw cap_error("naive_chain_oracle: visit budget exceeded");
  };

  // h: every strictly decreasing descent from the top is one chain ending
  // in the whole group.
  const int n = lattice.node_count();
  auto descend_h = [&](auto&& self, int at) -> void {
    spend();
    out.h += 1;
    for (int j = 0; j < n; ++j)
      if (lattice.properly_contains(at, j)) self(self, j);
  };
  descend_h(descend_h, lattice.top());

  // g: every bottom-to-top walk along covering edges is one maximal chain.
  auto descend_g = [&](auto&& self, int at) -> void {
    spend();
    if (at == lattice.bottom()) {
      out.g += 1;
      return;
    }
    for (int j : lattice.maximal_subgroups(at)) self(self, j);
  };
  descend_g(descend_g, lattice.top());
  return out;
}

BigInt lower_bound_h_sn(int n, std::span<const BigInt> h_alternating,
                        std::span<const BigInt> h_symmetric) {
  if (n < 5) throw parse_error("lower_bound_h_sn: defined for n >= 5");
  if (static_cast<int>(h_alternating.size()) < n + 1 ||
      static_cast<int>(h_symmetric.size()) < n)
    throw parse_error("lower_bound_h_sn: missing table entry");
  BigInt sum = 0;
  for (int r = 0; r <= n; ++r) {
    BigInt term = binomial(n, r) * h_alternating[n - r];
    sum += (r % 2 == 0) ? term : -term;
  }
  for (int r = 0; r <= n - 1; ++r) {
    BigInt term = binomial(n, r + 1) * h_symmetric[n - r - 1];
    sum += (r % 2 == 0) ? term : -term;
  }
  return 2 * sum;
}

}  // namespace chaincount
