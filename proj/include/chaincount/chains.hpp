#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "chaincount/bigint.hpp"
#include "chaincount/lattice.hpp"

namespace chaincount {

// g = number of maximal chains (unrefinable chains from the trivial subgroup
// to the whole group); h = number of chains of subgroups ending in the whole
// group. h is the number of equivalence classes of fuzzy subgroups under the
// level-subgroup relation, but this module only ever sees chains.
struct ChainCounts {
  BigInt g;
  BigInt h;
  std::vector<BigInt> per_node_g;  // maximal chains from bottom to node
  std::vector<BigInt> per_node_h;  // chains ending in node
};

// Both dynamic programs over the finished lattice:
//   h:  c(H) = 1 + sum of c(K) over proper subgroups K < H
//   g:  m(bottom) = 1; m(H) = sum of m(K) over K covered by H
ChainCounts chain_counts(const SubgroupLattice& lattice);

// Single-node views of the same DPs.
BigInt count_chains_ending(const SubgroupLattice& lattice, int node);
BigInt count_maximal_chains(const SubgroupLattice& lattice, int node);

// Every maximal chain passes through exactly one maximal subgroup, so
// g(G) = sum of g(M) over the maximal subgroups M. Returns one
// (maximal-subgroup node, maximal chain count) pair per maximal subgroup
// of the top node; the counts sum to g.
std::vector<std::pair<int, BigInt>> maximal_chain_decomposition(
    const SubgroupLattice& lattice);

// The rank-wise breakdown of the inclusion-exclusion evaluation of h:
// c[r-1] is the signed rank-r term (sign (-1)^(r-1) folded in) and
// total = 2 * sum c_r. trivial_tail_rank is the first rank at which every
// r-wise intersection of maximal subgroups is trivial (0 when no such rank
// exists below k); from there on c_r is (+/-) C(k,r) by the subset argument
// and the evaluation switches to binomial terms.
struct InclusionExclusionBreakdown {
  int k = 0;
  std::vector<BigInt> c;
  BigInt total;
  int trivial_tail_rank = 0;
};

// h via the alternating sum over intersections of maximal subgroups,
//   h(G) = 2 ( sum h(M_i) - sum h(M_i n M_j) + ... ),
// an independent route whose agreement with the chain DP is asserted by the
// test suite, never assumed. Every intersection must already be a node of
// the lattice (checked). Intersection h-values are memoized by mask.
// The trivial group (no maximal subgroups) returns h = 1 by definition.
// Throws cap_error when the group has more than max_k maximal subgroups.
std::pair<BigInt, InclusionExclusionBreakdown> h_by_inclusion_exclusion(
    const SubgroupLattice& lattice, int max_k = 24);

// n > 0 with its prime factorization, ascending primes.
struct FactoredInteger {
  std::uint64_t n = 1;
  std::vector<std::pair<std::uint64_t, int>> factors;

  static FactoredInteger of(std::uint64_t n);
  bool consistent() const;
};

// Maximal chains of the cyclic group of order n = p1^m1 ... ps^ms: the
// multinomial (m1+...+ms)! / (m1! ... ms!). Equals the lattice DP g on the
// divisor lattice; the test suite checks all n <= 200.
BigInt g_cyclic_multinomial(const FactoredInteger& n);

// Closed form for the chain count of the dihedral group of order 2*p^m:
// 2^m / (p-1) * (p^(m+1) + p - 2), evaluated exactly as
// 2^m * (1 + 1 + p + p^2 + ... + p^m). Callers cross-check against the
// lattice DP; the audit records agreement or disagreement per case.
BigInt h_dihedral_prime_power(std::uint64_t p, int m);

struct OracleCounts {
  BigInt g;
  BigInt h;
};

// Deliberately redundant exhaustive enumeration with no DP and no
// memoization: walks every strictly decreasing subgroup sequence from the
// top (counting h) and every bottom-to-top path in the covering relation
// (counting g). Each counted object costs one visit, so the budget bounds
// both counts. Throws cap_error when the budget is exhausted.
OracleCounts naive_chain_oracle(const SubgroupLattice& lattice,
                                std::uint64_t budget = 10'000'000);

// Lower bound for h of the symmetric group on n points, from the
// inclusion-exclusion over the subfamily {alternating group, n point
// stabilizers} of its maximal subgroups:
//   2 ( sum_{r=0..n}   (-1)^r C(n,r)   h(A_{n-r})
//     + sum_{r=0..n-1} (-1)^r C(n,r+1) h(S_{n-r-1}) ).
// h_alternating[i] = h(A_i) for i = 0..n; h_symmetric[i] = h(S_i) for
// i = 0..n-1. Degenerate indices follow the fixed convention
// h(S0)=h(S1)=h(A0)=h(A1)=h(A2)=1, h(A3)=2; callers supply tables built
// that way. Throws parse_error when a required entry is missing.
BigInt lower_bound_h_sn(int n, std::span<const BigInt> h_alternating,
                        std::span<const BigInt> h_symmetric);

}  // namespace chaincount
