#pragma once

// Small hand-built instances and brute-force oracles shared by the suites.
// The oracles restate definitions directly (quantifying over elements and
// subsets) and do not call the library routine they are compared against.

#include <cstdint>
#include <vector>

#include "fibrous/finite_core.hpp"
#include "fibrous/finite_topology.hpp"
#include "fibrous/functors.hpp"

namespace fixtures {

using namespace fibrous;

/// A = B = {0}, p = id, R = {(0,0)}, ∂(0,0) = 0.
inline FinFibrousPreorder one_point() {
  std::vector<FinFibrousPreorder::Transport> d{{0, 0, 0}};
  return FinFibrousPreorder(1, {0}, {PointSet(1, {0})}, d);
}

inline SpatialWitness one_point_witness(const FinFibrousPreorder& x) {
  std::vector<SpatialWitness::Meet> m{{0, 0, 0}};
  return SpatialWitness(x, {0}, m);
}

/// A preorder from its up-sets.
inline FinFibrousPreorder preorder(std::size_t n, const std::vector<std::vector<std::size_t>>& up) {
  std::vector<PointSet> leq;
  for (const auto& row : up) leq.push_back(PointSet::from_points(n, row));
  return from_preorder(leq);
}

/// 0 ≤ 1 on {0,1}; N(0) = {0,1}, N(1) = {1}.
inline FinFibrousPreorder sierpinski_preorder() { return preorder(2, {{0, 1}, {1}}); }

/// 0 ≤ 1 ≤ 2.
inline FinFibrousPreorder chain3() { return preorder(3, {{0, 1, 2}, {1, 2}, {2}}); }

/// Base {0,1,2}; the fibre over 0 holds two elements with incomparable
/// neighbourhoods {0,1} and {0,2}, so no fibre minimum exists.
inline FinFibrousPreorder incomparable_fiber() {
  std::vector<FinFibrousPreorder::Transport> d{{0, 0, 0}, {0, 1, 2}, {1, 0, 1}, {1, 2, 3}, {2, 1, 2}, {3, 2, 3}};
  return FinFibrousPreorder(3, {0, 0, 1, 2},
                            {PointSet(3, {0, 1}), PointSet(3, {0, 2}), PointSet(3, {1}), PointSet(3, {2})}, d);
}

// --- oracles -----------------------------------------------------------------

/// Does some section u of p satisfy N(u(p(a))) ⊆ N(a) for every a?
/// Enumerates every section.
inline bool umap_exists_by_sections(const FinFibrousPreorder& x) {
  std::vector<std::vector<Index>> fibers(x.nB());
  for (Index a = 0; a < x.nA(); ++a) fibers[x.p(a)].push_back(a);
  for (const auto& f : fibers)
    if (f.empty()) return false;
  std::vector<std::size_t> choice(x.nB(), 0);
  for (;;) {
    bool ok = true;
    for (Index a = 0; a < x.nA() && ok; ++a) {
      Index u = fibers[x.p(a)][choice[x.p(a)]];
      for (Index y = 0; y < x.nB() && ok; ++y)
        if (x.related(u, y) && !x.related(a, y)) ok = false;
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < x.nB() && ++choice[i] == fibers[i].size()) choice[i++] = 0;
    if (i == x.nB()) return false;
  }
}

/// Opens of F(X) by the defining condition, evaluated on every subset with
/// plain loops over elements and points.
inline std::vector<std::uint64_t> open_sets_by_definition(const FinFibrousPreorder& x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t o = 0; o < (std::uint64_t{1} << x.nB()); ++o) {
    bool open = true;
    for (Index y = 0; y < x.nB() && open; ++y) {
      if (((o >> y) & 1U) == 0) continue;
      bool found = false;
      for (Index a = 0; a < x.nA() && !found; ++a) {
        if (x.p(a) != y) continue;
        bool inside = true;
        for (Index z = 0; z < x.nB(); ++z)
          if (x.related(a, z) && ((o >> z) & 1U) == 0) inside = false;
        found = inside;
      }
      open = found;
    }
    if (open) out.push_back(o);
  }
  return out;
}

inline std::vector<std::uint64_t> as_bits(const FiniteTopology& t) {
  std::vector<std::uint64_t> out;
  for (const auto& u : t.opens()) out.push_back(u.bits());
  return out;
}

/// Specialization preorder straight from the definition: x ≤ y iff every
/// open containing x contains y.
inline bool specializes(const FiniteTopology& t, std::size_t x, std::size_t y) {
  for (const auto& u : t.opens())
    if (u.contains(x) && !u.contains(y)) return false;
  return true;
}

/// Every point map {0..n-1} -> {0..m-1}.
inline std::vector<std::vector<Index>> all_maps(std::size_t n, std::size_t m) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> f(n, 0);
  if (m == 0) return n == 0 ? std::vector<std::vector<Index>>{f} : out;
  for (;;) {
    out.push_back(f);
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) return out;
  }
}

/// Continuity from the definition, written without the library's preimage().
inline bool continuous_by_definition(const std::vector<Index>& f, const FiniteTopology& s, const FiniteTopology& t) {
  for (const auto& u : t.opens()) {
    PointSet pre(s.nB());
    for (Index x = 0; x < f.size(); ++x)
      if (u.contains(f[x])) pre.insert(x);
    bool found = false;
    for (const auto& v : s.opens()) found = found || v == pre;
    if (!found) return false;
  }
  return true;
}

}  // namespace fixtures
