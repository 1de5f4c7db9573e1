#include <doctest.h>

#include "fibrous/finite_topology.hpp"
#include "fixtures.hpp"

using namespace fibrous;

TEST_CASE("validate_topology") {
  CHECK(validate_topology(FiniteTopology::sierpinski()).passed());
  CHECK(validate_topology(FiniteTopology::discrete(3)).passed());
  CHECK(validate_topology(FiniteTopology::indiscrete(3)).passed());

  auto r = validate_topology(FiniteTopology(3, {PointSet(3), PointSet(3, {0}), PointSet(3, {1}), PointSet::full(3)}));
  CHECK(r.has("T-union"));
  CHECK_FALSE(r.has("T-intersection"));
  CHECK(r.first("T-union")->witness == json::array({json::array({0}), json::array({1})}));

  auto i = validate_topology(
      FiniteTopology(3, {PointSet(3), PointSet(3, {0, 1}), PointSet(3, {1, 2}), PointSet::full(3)}));
  CHECK(i.has("T-intersection"));
  CHECK_FALSE(i.has("T-union"));

  CHECK(validate_topology(FiniteTopology(2, {PointSet::full(2)})).has("T-empty"));
  CHECK(validate_topology(FiniteTopology(2, {PointSet(2)})).has("T-full"));
  CHECK(validate_topology(FiniteTopology(1, {PointSet(1), PointSet(1), PointSet::full(1)})).has("T-duplicate"));
}

TEST_CASE("topology counts") {
  // Counts of topologies on n labelled points.
  const std::size_t expected[] = {1, 1, 4, 29, 355};
  for (std::size_t n = 0; n <= 3; ++n) {
    auto brute = enumerate_topologies_brute(n);
    auto closure = enumerate_topologies_by_closure(n);
    CHECK(brute.size() == expected[n]);
    CHECK(brute == closure);
  }
  auto four = enumerate_topologies(4);
  CHECK(four.size() == expected[4]);
  CHECK(four == enumerate_topologies_by_closure(4));
  for (const auto& t : four) CHECK(validate_topology(t).passed());
  CHECK_THROWS_AS(enumerate_topologies(5), std::invalid_argument);
}

TEST_CASE("T0 counts") {
  const std::size_t expected[] = {1, 1, 3, 19, 219};
  for (std::size_t n = 0; n <= 4; ++n) {
    std::size_t t0 = 0;
    for (const auto& t : enumerate_topologies(n)) t0 += is_t0(t) ? 1 : 0;
    CHECK(t0 == expected[n]);
  }
}

TEST_CASE("the brute enumeration also finds 355 topologies on four points") {
  CHECK(enumerate_topologies_brute(4).size() == 355);
}

TEST_CASE("specialization agrees with the definition") {
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& t : enumerate_topologies(n)) {
      auto spec = specialization(t);
      for (std::size_t x = 0; x < n; ++x) {
        CHECK(t.is_open(spec.theta[x]));
        for (std::size_t y = 0; y < n; ++y) CHECK(spec.le(x, y) == fixtures::specializes(t, x, y));
      }
    }
  auto s = specialization(FiniteTopology::sierpinski());
  CHECK(s.theta[0] == PointSet(2, {0, 1}));
  CHECK(s.theta[1] == PointSet(2, {1}));
  CHECK(s.le(0, 1));
  CHECK_FALSE(s.le(1, 0));
}

TEST_CASE("close_family and preimage") {
  auto t = close_family(3, {PointSet(3, {0}), PointSet(3, {1})});
  CHECK(t == FiniteTopology(3, {PointSet(3), PointSet(3, {0}), PointSet(3, {1}), PointSet(3, {0, 1}),
                                PointSet::full(3)}));
  CHECK(preimage({1, 1, 0}, PointSet(2, {1})) == PointSet(3, {0, 1}));
  CHECK(preimage({}, PointSet(2, {1})) == PointSet(0));
}
