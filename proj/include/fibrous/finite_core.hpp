#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "fibrous/point_set.hpp"
#include "fibrous/report.hpp"

namespace fibrous {

using Index = std::size_t;
inline constexpr Index kUndefined = static_cast<Index>(-1);

/// A finite fibrous preorder: fibre elements A = {0..nA-1} over base points
/// B = {0..nB-1} via `p`, a relation R given as the neighbourhood set N(a) of
/// each element, and the transport map ∂ defined exactly on the pairs of R.
///
/// Construction validates the structure only (ranges, domain of ∂). The
/// axioms F1-F3 are checked separately by check_axioms so that invalid
/// instances can still be represented and diagnosed.
class FinFibrousPreorder {
 public:
  using Transport = std::tuple<Index, Index, Index>;  // (a, b, ∂(a,b))

  FinFibrousPreorder() = default;

  /// Throws StructureError when an index is out of range or ∂ is not defined
  /// on exactly the pairs of R.
  FinFibrousPreorder(std::size_t nB, std::vector<Index> p, std::vector<PointSet> relation,
                     std::span<const Transport> transport);

  std::size_t nB() const noexcept { return nB_; }
  std::size_t nA() const noexcept { return p_.size(); }

  Index p(Index a) const { return p_.at(a); }
  const std::vector<Index>& projection() const noexcept { return p_; }

  /// N(a) = {y | aRy}.
  const PointSet& neighborhood(Index a) const;

  bool related(Index a, Index y) const { return neighborhood(a).contains(y); }

  /// ∂(a, b); throws StructureError when (a, b) is not in R.
  Index transport(Index a, Index b) const;

  /// Elements of the fibre p⁻¹(x), ascending.
  std::vector<Index> fiber(Index x) const;

  std::vector<Transport> transport_table() const;

  friend bool operator==(const FinFibrousPreorder&, const FinFibrousPreorder&) = default;

 private:
  std::size_t nB_ = 0;
  std::vector<Index> p_;
  std::vector<PointSet> relation_;
  std::vector<Index> transport_;  // dense nA x nB, kUndefined off R
};

/// Section s and fibrewise meet m making a fibrous preorder spatial.
class SpatialWitness {
 public:
  using Meet = std::tuple<Index, Index, Index>;  // (a, a', m(a,a'))

  SpatialWitness() = default;

  /// Throws StructureError unless s is total on B and m is defined exactly on
  /// the pairs with p(a) = p(a').
  SpatialWitness(const FinFibrousPreorder& x, std::vector<Index> section, std::span<const Meet> meet);

  Index s(Index y) const { return section_.at(y); }
  Index m(Index a, Index a2) const;

  const std::vector<Index>& section() const noexcept { return section_; }
  std::vector<Meet> meet_table() const;

 private:
  std::size_t nA_ = 0;
  std::vector<Index> section_;
  std::vector<Index> meet_;  // dense nA x nA, kUndefined off A ×_B A
};

struct EquivalenceWitness {
  std::vector<Index> phi;    // A -> A'
  std::vector<Index> gamma;  // A' -> A
};

struct UMap {
  std::vector<Index> u;          // B -> A, a section of p
  std::vector<PointSet> order;   // x R° y  <=>  y in order[x]

  bool leq(Index x, Index y) const { return order.at(x).contains(y); }
};

struct CheckOptions {
  bool verbose = false;  // keep every witness instead of one per tag
};

/// F1-F3, plus F4-F6 when a spatial witness is supplied.
AxiomReport check_axioms(const FinFibrousPreorder& x, const SpatialWitness* w = nullptr,
                         CheckOptions opts = {});

inline AxiomReport check_axioms(const FinFibrousPreorder& x, const SpatialWitness& w,
                                CheckOptions opts = {}) {
  return check_axioms(x, &w, opts);
}

inline const PointSet& neighborhood(const FinFibrousPreorder& x, Index a) { return x.neighborhood(a); }

/// Searches for (φ, γ) over a shared base. Each element maps to the element
/// with the same index when that one is admissible, otherwise to the least
/// admissible index; so X against itself yields the identity pair.
/// Throws StructureError when the base sizes differ.
std::optional<EquivalenceWitness> find_equivalence(const FinFibrousPreorder& x,
                                                   const FinFibrousPreorder& y);

/// Checks p'φ = p, pγ = p' and the neighbourhood inclusions N'(φ(a)) ⊆ N(a),
/// N(γ(a')) ⊆ N'(a') (tags F9, F10).
AxiomReport verify_equivalence(const FinFibrousPreorder& x, const FinFibrousPreorder& y,
                               const EquivalenceWitness& w, CheckOptions opts = {});

/// The fibre-minimum section u and the induced preorder on B, or nothing when
/// some fibre has no element with a least neighbourhood.
std::optional<UMap> find_umap(const FinFibrousPreorder& x);

/// A preorder (B, ≤) presented as a fibrous preorder: A = B, p = id,
/// xRy iff x ≤ y, ∂(x,y) = y. `leq[x]` holds the up-set of x.
FinFibrousPreorder from_preorder(std::span<const PointSet> leq);

/// s = id and m(x,x) = x; valid because every fibre of p = id is a singleton.
SpatialWitness preorder_spatial_witness(const FinFibrousPreorder& x);

}  // namespace fibrous
