#include <doctest.h>

#include <random>
#include <set>

#include "fibrous/point_set.hpp"

using fibrous::PointSet;

TEST_CASE("basic membership and algebra") {
  PointSet a(5, {0, 2, 4});
  PointSet b(5, {2, 3});
  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(1));
  CHECK_FALSE(a.contains(99));
  CHECK((a | b) == PointSet(5, {0, 2, 3, 4}));
  CHECK((a & b) == PointSet(5, {2}));
  CHECK((a - b) == PointSet(5, {0, 4}));
  CHECK(a.complement() == PointSet(5, {1, 3}));
  CHECK(PointSet(5, {2}).is_subset_of(a));
  CHECK_FALSE(b.is_subset_of(a));
  CHECK(a.size() == 3);
  CHECK(a.to_string() == "{0,2,4}");
  CHECK_THROWS_AS(a.insert(5), std::out_of_range);
  CHECK_THROWS_AS(a |= PointSet(6), std::invalid_argument);
}

TEST_CASE("ordering follows the bit value") {
  CHECK(PointSet(3, {1}) < PointSet(3, {0, 1}));
  CHECK(PointSet(3, {0, 1}) < PointSet(3, {2}));
  CHECK(PointSet::from_bits(3, 0b101) == PointSet(3, {0, 2}));
  CHECK(PointSet::full(3).bits() == 0b111);
}

TEST_CASE("wide sets agree with a std::set model") {
  std::mt19937_64 rng(7);
  for (std::size_t universe : {1u, 63u, 64u, 65u, 130u, 200u}) {
    for (int trial = 0; trial < 50; ++trial) {
      PointSet a(universe), b(universe);
      std::set<std::size_t> ma, mb;
      for (std::size_t x = 0; x < universe; ++x) {
        if (rng() % 3 == 0) {
          a.insert(x);
          ma.insert(x);
        }
        if (rng() % 3 == 0) {
          b.insert(x);
          mb.insert(x);
        }
      }
      std::set<std::size_t> mu = ma, mi;
      mu.insert(mb.begin(), mb.end());
      for (auto x : ma)
        if (mb.count(x)) mi.insert(x);
      auto u = (a | b).to_vector();
      auto i = (a & b).to_vector();
      CHECK(std::set<std::size_t>(u.begin(), u.end()) == mu);
      CHECK(std::set<std::size_t>(i.begin(), i.end()) == mi);
      CHECK((a & b).is_subset_of(a));
      CHECK(a.is_subset_of(a | b));
      CHECK(a.size() == ma.size());
      CHECK(PointSet::full(universe).size() == universe);
    }
  }
}
