#include <doctest.h>

#include "fibrous/finite_core.hpp"
#include "fibrous/functors.hpp"
#include "fixtures.hpp"

using namespace fibrous;
using fixtures::one_point;

namespace {

FinFibrousPreorder with_transport(const FinFibrousPreorder& x, Index a, Index b, Index target) {
  auto d = x.transport_table();
  for (auto& [aa, bb, t] : d)
    if (aa == a && bb == b) t = target;
  std::vector<PointSet> rel;
  for (Index i = 0; i < x.nA(); ++i) rel.push_back(x.neighborhood(i));
  return FinFibrousPreorder(x.nB(), x.projection(), rel, d);
}

}  // namespace

TEST_CASE("structural validation") {
  using T = FinFibrousPreorder::Transport;
  std::vector<T> ok{{0, 0, 0}};
  CHECK_NOTHROW(FinFibrousPreorder(1, {0}, {PointSet(1, {0})}, ok));
  SUBCASE("p out of range") { CHECK_THROWS_AS(FinFibrousPreorder(1, {1}, {PointSet(1, {0})}, ok), StructureError); }
  SUBCASE("d missing on R") {
    std::vector<T> none;
    CHECK_THROWS_AS(FinFibrousPreorder(1, {0}, {PointSet(1, {0})}, none), StructureError);
  }
  SUBCASE("d defined off R") {
    std::vector<T> extra{{0, 0, 0}, {0, 1, 0}};
    CHECK_THROWS_AS(FinFibrousPreorder(2, {0}, {PointSet(2, {0})}, extra), StructureError);
  }
  SUBCASE("R row count") { CHECK_THROWS_AS(FinFibrousPreorder(1, {0}, {}, ok), StructureError); }
  SUBCASE("spatial witness must cover every fibre pair") {
    auto x = one_point();
    std::vector<SpatialWitness::Meet> none;
    CHECK_THROWS_AS(SpatialWitness(x, {0}, none), StructureError);
    std::vector<SpatialWitness::Meet> m{{0, 0, 0}};
    CHECK_THROWS_AS(SpatialWitness(x, {}, m), StructureError);
  }
  SUBCASE("queries off the table") {
    auto x = one_point();
    CHECK_THROWS_AS(x.neighborhood(3), StructureError);
    auto s = fixtures::sierpinski_preorder();
    CHECK_THROWS_AS(s.transport(1, 0), StructureError);  // 1 R 0 does not hold
  }
}

TEST_CASE("check_axioms on small instances") {
  auto x = one_point();
  auto w = fixtures::one_point_witness(x);
  CHECK(check_axioms(x).passed());
  CHECK(check_axioms(x, w).passed());

  auto g = functor_G_obj(FiniteTopology::sierpinski());
  auto report = check_axioms(g.X, g.w);
  CHECK(report.passed());
  CHECK(report.checked > 0);

  SUBCASE("transport landing in the wrong fibre violates F1") {
    // a1 = ({0,1}, 0) has p(a1) = 0; send ∂(a1, 1) back to a1.
    REQUIRE(g.labels[1] == GImage::Label{PointSet(2, {0, 1}), 0});
    auto bad = with_transport(g.X, 1, 1, 1);
    auto r = check_axioms(bad);
    REQUIRE_FALSE(r.passed());
    REQUIRE(r.has("F1"));
    CHECK(r.first("F1")->witness == json::array({1, 1}));
  }
  SUBCASE("F2 and F3") {
    using T = FinFibrousPreorder::Transport;
    // Element 0 over point 0 whose neighbourhood misses 0.
    std::vector<T> d{{0, 1, 1}, {1, 1, 1}};
    FinFibrousPreorder x2(2, {0, 1}, {PointSet(2, {1}), PointSet(2, {1})}, d);
    CHECK(check_axioms(x2).has("F2"));
    // ∂(0,1) = 1 has a larger neighbourhood than 0.
    std::vector<T> d3{{0, 0, 0}, {0, 1, 1}, {1, 0, 0}, {1, 1, 1}};
    FinFibrousPreorder x3(2, {0, 1}, {PointSet(2, {0, 1}), PointSet(2, {0, 1})}, d3);
    CHECK(check_axioms(x3).passed());
    std::vector<T> d4{{0, 0, 0}, {0, 1, 2}, {1, 1, 1}, {2, 0, 0}, {2, 1, 2}};
    FinFibrousPreorder x4(2, {0, 1, 1}, {PointSet(2, {0, 1}), PointSet(2, {1}), PointSet(2, {0, 1})}, d4);
    CHECK(check_axioms(x4).passed());
    // Now make ∂(1,1) point at the element with the larger neighbourhood.
    std::vector<T> d6{{0, 0, 0}, {0, 1, 1}, {1, 1, 2}, {2, 0, 0}, {2, 1, 2}};
    FinFibrousPreorder x6(2, {0, 1, 1}, {PointSet(2, {0, 1}), PointSet(2, {1}), PointSet(2, {0, 1})}, d6);
    auto r = check_axioms(x6);
    REQUIRE(r.has("F3"));
    CHECK(r.first("F3")->witness == json::array({1, 1, 0}));
  }
  SUBCASE("F4-F6 through a bad witness") {
    std::vector<SpatialWitness::Meet> m;
    for (auto [a, b, t] : g.w.meet_table()) m.emplace_back(a, b, t);
    // s(0) pointing at an element over 1 breaks F4.
    SpatialWitness bad_s(g.X, {2, 2}, m);
    CHECK(check_axioms(g.X, bad_s).has("F4"));
    // m(({1},1), ({0,1},1)) = ({0,1},1) is too large: F6.
    for (auto& [a, b, t] : m)
      if (a == 0 && b == 2) t = 2;
    SpatialWitness bad_m(g.X, g.w.section(), m);
    auto r = check_axioms(g.X, bad_m);
    REQUIRE(r.has("F6"));
    CHECK(r.first("F6")->witness == json::array({0, 2, 0}));
  }
}

TEST_CASE("verbose reports keep every witness") {
  using T = FinFibrousPreorder::Transport;
  std::vector<T> d{{0, 1, 1}, {1, 0, 0}};
  FinFibrousPreorder x(2, {0, 1}, {PointSet(2, {1}), PointSet(2, {0})}, d);
  // F2 and F3 fail at both elements.
  CHECK(check_axioms(x).violations.size() == 2);
  CHECK(check_axioms(x, nullptr, {.verbose = true}).violations.size() == 4);
}

TEST_CASE("neighborhood") {
  auto g = functor_G_obj(FiniteTopology::sierpinski());
  auto a = g.find(PointSet(2, {1}), 1);
  REQUIRE(a);
  CHECK(neighborhood(g.X, *a) == PointSet(2, {1}));
  CHECK(neighborhood(one_point(), 0) == PointSet(1, {0}));
  auto gi = functor_G_obj(FiniteTopology::indiscrete(2));
  CHECK(neighborhood(gi.X, *gi.find(PointSet::full(2), 0)) == PointSet(2, {0, 1}));
  CHECK_THROWS_AS(neighborhood(one_point(), 1), StructureError);
}

TEST_CASE("find_equivalence") {
  auto g = functor_G_obj(FiniteTopology::sierpinski());
  SUBCASE("an instance against itself gives identity maps") {
    auto w = find_equivalence(g.X, g.X);
    REQUIRE(w);
    CHECK(w->phi == std::vector<Index>{0, 1, 2});
    CHECK(w->gamma == std::vector<Index>{0, 1, 2});
  }
  SUBCASE("G(Sierpinski) and the Sierpinski preorder") {
    auto pre = fixtures::sierpinski_preorder();
    auto w = find_equivalence(g.X, pre);
    REQUIRE(w);
    CHECK(verify_equivalence(g.X, pre, *w).passed());
    auto back = find_equivalence(pre, g.X);
    REQUIRE(back);
    CHECK(verify_equivalence(pre, g.X, *back).passed());
  }
  SUBCASE("discrete and indiscrete are not equivalent") {
    auto d = functor_G_obj(FiniteTopology::discrete(2));
    auto i = functor_G_obj(FiniteTopology::indiscrete(2));
    CHECK_FALSE(find_equivalence(d.X, i.X));
    CHECK_FALSE(find_equivalence(i.X, d.X));
  }
  SUBCASE("base sizes must match") { CHECK_THROWS_AS(find_equivalence(g.X, one_point()), StructureError); }
}

TEST_CASE("find_equivalence success is symmetric on random spatial instances") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    auto a = random_spatial_preorder(s, 3, 8);
    auto b = random_spatial_preorder(s + 1000, 3, 8);
    if (a.X.nB() != b.X.nB()) continue;
    CHECK(find_equivalence(a.X, b.X).has_value() == find_equivalence(b.X, a.X).has_value());
    auto self = find_equivalence(a.X, a.X);
    REQUIRE(self);
    for (Index i = 0; i < a.X.nA(); ++i) CHECK(self->phi[i] == i);
  }
}

TEST_CASE("find_umap") {
  SUBCASE("one point") {
    auto u = find_umap(one_point());
    REQUIRE(u);
    CHECK(u->u == std::vector<Index>{0});
    CHECK(u->leq(0, 0));
  }
  SUBCASE("G(Sierpinski)") {
    auto g = functor_G_obj(FiniteTopology::sierpinski());
    auto u = find_umap(g.X);
    REQUIRE(u);
    CHECK(g.labels[u->u[0]] == GImage::Label{PointSet(2, {0, 1}), 0});
    CHECK(g.labels[u->u[1]] == GImage::Label{PointSet(2, {1}), 1});
    CHECK(u->leq(0, 0));
    CHECK(u->leq(0, 1));
    CHECK(u->leq(1, 1));
    CHECK_FALSE(u->leq(1, 0));
  }
  SUBCASE("incomparable neighbourhoods in one fibre") {
    auto x = fixtures::incomparable_fiber();
    REQUIRE(check_axioms(x).passed());
    CHECK_FALSE(find_umap(x));
    CHECK_FALSE(fixtures::umap_exists_by_sections(x));
  }
}

// Every fibrous preorder with nB = 3, nA = 4 (∂ chosen as the least admissible
// element) against the section-enumeration oracle.
TEST_CASE("find_umap agrees with section enumeration on all small instances") {
  const std::size_t nB = 3, nA = 4;
  std::size_t instances = 0, absent = 0;
  for (const auto& p : fixtures::all_maps(nA, nB)) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (nA * nB)); ++code) {
      std::vector<PointSet> rel;
      bool reflexive = true;
      for (Index a = 0; a < nA; ++a) {
        rel.push_back(PointSet::from_bits(nB, (code >> (a * nB)) & 0b111));
        reflexive = reflexive && rel.back().contains(p[a]);
      }
      if (!reflexive) continue;
      std::vector<FinFibrousPreorder::Transport> d;
      bool ok = true;
      for (Index a = 0; a < nA && ok; ++a)
        rel[a].for_each([&](std::size_t b) {
          for (Index t = 0; t < nA; ++t)
            if (p[t] == b && rel[t].is_subset_of(rel[a])) {
              d.emplace_back(a, b, t);
              return;
            }
          ok = false;
        });
      if (!ok) continue;
      FinFibrousPreorder x(nB, p, rel, d);
      REQUIRE(check_axioms(x).passed());
      ++instances;
      auto u = find_umap(x);
      CHECK(u.has_value() == fixtures::umap_exists_by_sections(x));
      if (!u) {
        ++absent;
        continue;
      }
      // R° is a preorder.
      for (Index i = 0; i < nB; ++i) {
        CHECK(u->leq(i, i));
        for (Index j = 0; j < nB; ++j)
          for (Index k = 0; k < nB; ++k)
            if (u->leq(i, j) && u->leq(j, k)) CHECK(u->leq(i, k));
      }
      // The preorder it presents is equivalent to x.
      auto pre = from_preorder(u->order);
      CHECK(find_equivalence(x, pre).has_value());
    }
  }
  CHECK(instances > 0);
  CHECK(absent > 0);
  MESSAGE(instances << " instances, " << absent << " without a u-map");
}

TEST_CASE("preorder presentation") {
  auto c = fixtures::chain3();
  auto w = preorder_spatial_witness(c);
  CHECK(check_axioms(c, w).passed());
  auto g = functor_G_obj(FiniteTopology::sierpinski());
  CHECK_THROWS_AS(preorder_spatial_witness(g.X), StructureError);
}
