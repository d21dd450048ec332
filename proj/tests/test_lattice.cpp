#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "chaincount/errors.hpp"
#include "chaincount/lattice.hpp"
#include "oracles.hpp"

using namespace chaincount;
using chaincount::testing::subset_oracle_subgroups;

namespace {

std::vector<Bitmask> sorted_masks(const SubgroupLattice& lat) {
  std::vector<Bitmask> ms;
  for (int i = 0; i < lat.node_count(); ++i) ms.push_back(lat.node_mask(i));
  return ms;  // already deterministic (order, mask)
}

void check_two_seed_agreement(const ElementTable& g) {
  SubgroupLattice a = enumerate_subgroups(g, 720, SeedOrder::ascending);
  SubgroupLattice b = enumerate_subgroups(g, 720, SeedOrder::descending);
  CHECK(sorted_masks(a) == sorted_masks(b));
}

}  // namespace

TEST_CASE("subgroup counts for the symmetric chain") {
  CHECK(enumerate_subgroups(named_group(Family::symmetric, 3)).node_count() ==
        6);
  CHECK(enumerate_subgroups(named_group(Family::symmetric, 4)).node_count() ==
        30);
  CHECK(enumerate_subgroups(named_group(Family::symmetric, 5)).node_count() ==
        156);
  CHECK(enumerate_subgroups(named_group(Family::alternating, 5)).node_count() ==
        59);
}

TEST_CASE("two independent seed orders agree") {
  check_two_seed_agreement(named_group(Family::symmetric, 3));
  check_two_seed_agreement(named_group(Family::symmetric, 4));
  check_two_seed_agreement(named_group(Family::symmetric, 5));
  check_two_seed_agreement(named_group(Family::alternating, 5));
  check_two_seed_agreement(named_group(Family::dihedral, 20));
}

TEST_CASE("exhaustive subset oracle confirms completeness at small orders") {
  for (auto [family, n] : std::vector<std::pair<Family, int>>{
           {Family::symmetric, 3},
           {Family::dihedral, 8},
           {Family::alternating, 4},
           {Family::dihedral, 12},
           {Family::cyclic, 24},
           {Family::symmetric, 4}}) {
    ElementTable g = named_group(family, n);
    REQUIRE(g.order() <= 24);
    SubgroupLattice lat = enumerate_subgroups(g);
    std::vector<Bitmask> oracle = subset_oracle_subgroups(g);
    std::sort(oracle.begin(), oracle.end(),
              [](const Bitmask& a, const Bitmask& b) {
                if (a.count() != b.count()) return a.count() < b.count();
                return a < b;
              });
    CHECK(oracle == sorted_masks(lat));
  }
}

TEST_CASE("every node is a closed subgroup and Lagrange holds") {
  ElementTable s5 = named_group(Family::symmetric, 5);
  SubgroupLattice lat = enumerate_subgroups(s5);
  for (int i = 0; i < lat.node_count(); ++i) {
    CHECK(is_subgroup_mask(s5, lat.node_mask(i)));
    CHECK(s5.order() % lat.node_order(i) == 0);
  }
}

TEST_CASE("the lattice is conjugation-stable") {
  for (auto [family, n] : std::vector<std::pair<Family, int>>{
           {Family::symmetric, 4}, {Family::symmetric, 5}}) {
    ElementTable g = named_group(family, n);
    SubgroupLattice lat = enumerate_subgroups(g);
    for (int i = 0; i < lat.node_count(); ++i)
      for (int e = 1; e < g.order(); ++e)
        CHECK(lat.find_node(conjugate(lat.handle(i), e).mask) >= 0);
  }
}

TEST_CASE("maximal subgroups") {
  ElementTable s5 = named_group(Family::symmetric, 5);
  SubgroupLattice lat = enumerate_subgroups(s5);

  CHECK(lat.maximal_subgroups(lat.bottom()).empty());

  std::map<int, int> census;
  for (int m : lat.maximal_subgroups(lat.top()))
    census[lat.node_order(m)]++;
  CHECK(census == std::map<int, int>{{12, 10}, {20, 6}, {24, 5}, {60, 1}});

  ElementTable s4 = named_group(Family::symmetric, 4);
  SubgroupLattice lat4 = enumerate_subgroups(s4);
  std::map<int, int> census4;
  for (int m : lat4.maximal_subgroups(lat4.top()))
    census4[lat4.node_order(m)]++;
  CHECK(census4 == std::map<int, int>{{6, 4}, {8, 3}, {12, 1}});
}

TEST_CASE("covering relation") {
  // chain lattice of C4: two covering pairs
  CHECK(enumerate_subgroups(named_group(Family::cyclic, 4))
            .covering_pairs()
            .size() == 2);
  // Klein group: three atoms, each covering bottom and covered by top
  CHECK(enumerate_subgroups(named_group(Family::dihedral, 4))
            .covering_pairs()
            .size() == 6);
  // S3: four atoms between bottom and top
  CHECK(enumerate_subgroups(named_group(Family::symmetric, 3))
            .covering_pairs()
            .size() == 8);

  // covers have no transitive shortcuts, and |covers| <= |strict pairs|
  SubgroupLattice lat = enumerate_subgroups(named_group(Family::symmetric, 4));
  std::size_t strict_pairs = 0;
  for (int y = 0; y < lat.node_count(); ++y)
    for (int x = 0; x < lat.node_count(); ++x)
      if (lat.properly_contains(y, x)) ++strict_pairs;
  CHECK(lat.covering_pairs().size() <= strict_pairs);
  for (auto [x, y] : lat.covering_pairs()) {
    CHECK(lat.properly_contains(y, x));
    for (int z = 0; z < lat.node_count(); ++z)
      CHECK(!(lat.properly_contains(z, x) && lat.properly_contains(y, z)));
  }
}

TEST_CASE("trivial group lattice") {
  SubgroupLattice lat = enumerate_subgroups(named_group(Family::cyclic, 1));
  CHECK(lat.node_count() == 1);
  CHECK(lat.bottom() == lat.top());
  CHECK(lat.covering_pairs().empty());
}

TEST_CASE("enumeration cap") {
  ElementTable s5 = named_group(Family::symmetric, 5);
  CHECK_THROWS_AS(enumerate_subgroups(s5, 100), cap_error);
}
