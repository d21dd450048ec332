#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace chaincount {

// A bijection on the points 1..degree. Points are 1-based in every external
// representation (cycle strings, CLI, JSON); storage is 0-based. The degree
// is explicit and never inferred from the largest moved point: (1,2) in S5
// and (1,2) in S2 are distinct values.
class Permutation {
 public:
  // Identity on 1..degree.
  explicit Permutation(int degree);
  // images_zero_based[i] is the 0-based image of 0-based point i; must be a
  // bijection (checked).
  Permutation(int degree, std::vector<std::uint16_t> images_zero_based);

  int degree() const { return degree_; }
  // 0-based image lookup.
  int operator[](int i) const { return images_[i]; }
  bool is_identity() const;

  // 1-based image of a 1-based point, matching the external convention.
  int image_of(int point) const { return images_[point - 1] + 1; }

  bool operator==(const Permutation&) const = default;
  std::strong_ordering operator<=>(const Permutation& o) const {
    if (auto c = degree_ <=> o.degree_; c != 0) return c;
    return images_ <=> o.images_;
  }

  const std::vector<std::uint16_t>& images() const { return images_; }

 private:
  int degree_;
  std::vector<std::uint16_t> images_;
};

// Parses disjoint-or-not cycle notation: "(1,2,3)(4,5)". Whitespace is
// ignored; "" and "()" are the identity; points absent from every cycle are
// fixed. Throws parse_error on duplicate points, points out of 1..degree, or
// malformed parentheses.
Permutation parse_permutation(std::string_view text, int degree);

// Canonical cycle string: cycles ordered by smallest moved point, each cycle
// started at its smallest point. Identity formats as "()". This is the only
// permutation text format in the repo; parse_permutation inverts it exactly.
std::string format_cycles(const Permutation& p);

// Composition convention, fixed project-wide: compose(p, q) applies q first,
// i.e. the result maps i to p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

// Least k >= 1 with p^k = identity (lcm of cycle lengths). Throws cap_error
// if the lcm overflows 64 bits (cannot happen at this repo's degrees).
std::uint64_t order_of(const Permutation& p);

// Cycle lengths >= 2, sorted ascending. Shared by order_of and formatting.
std::vector<int> cycle_type(const Permutation& p);

}  // namespace chaincount
