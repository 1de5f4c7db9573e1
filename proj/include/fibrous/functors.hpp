#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fibrous/finite_core.hpp"
#include "fibrous/finite_topology.hpp"
#include "fibrous/morphisms.hpp"

namespace fibrous {

/// The fibrous preorder of a finite space: A = {(U, x) | x ∈ U ∈ τ},
/// enumerated open by open in canonical order and by ascending x inside each.
struct GImage {
  using Label = std::pair<PointSet, Index>;  // (U, x)

  FinFibrousPreorder X;
  SpatialWitness w;
  std::vector<Label> labels;

  /// Index of (U, x), or nothing when U is not open or x ∉ U.
  std::optional<Index> find(const PointSet& u, Index x) const;

 private:
  friend GImage functor_G_obj(const FiniteTopology&);
  std::map<Label, Index> index_;
};

GImage functor_G_obj(const FiniteTopology& t);

/// Raised by functor_G_mor when an open set of the target has a non-open
/// preimage.
class NotContinuous : public std::invalid_argument {
 public:
  NotContinuous(PointSet open, PointSet pre);
  const PointSet& open() const noexcept { return open_; }
  const PointSet& preimage() const noexcept { return preimage_; }

 private:
  PointSet open_;
  PointSet preimage_;
};

/// Returns the first open set of `target` (canonical order) whose preimage
/// under f is not open in `source`.
std::optional<PointSet> continuity_violation(const std::vector<Index>& f, const FiniteTopology& source,
                                             const FiniteTopology& target);

/// (f, f*) with f*((U', x'), y) = (f⁻¹(U'), y). Throws NotContinuous.
FibrousMorphism functor_G_mor(const std::vector<Index>& f, const GImage& source, const GImage& target,
                              const FiniteTopology& source_top, const FiniteTopology& target_top);

FibrousMorphism functor_G_mor(const std::vector<Index>& f, const FiniteTopology& source,
                              const FiniteTopology& target);

enum class OpenSetAlgorithm { union_closure, brute };

inline constexpr std::size_t kDefaultBruteLimit = 20;

/// Raised when the brute algorithm is asked for more points than its limit.
class InstanceTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The topology whose opens are the O ⊆ B such that every y ∈ O has some a
/// over y with N(a) ⊆ O.
///
/// union_closure returns all unions of the neighbourhood sets N(a); brute
/// tests the defining condition on every subset and refuses nB > brute_limit.
/// The witness is part of the contract (F4 makes B open) but neither
/// algorithm needs to read it.
FiniteTopology functor_F_obj(const FinFibrousPreorder& x, const SpatialWitness& w,
                             OpenSetAlgorithm algorithm = OpenSetAlgorithm::union_closure,
                             std::size_t brute_limit = kDefaultBruteLimit);

/// F(G(T)) == T, reporting each differing open set under tag FG.
AxiomReport roundtrip_FG(const FiniteTopology& t);

/// φ(a) = (N(a), p(a)) in G(F(X)) and γ(u, x) = least a over x with N(a) ⊆ u.
/// The witness is verified against the F9/F10 inclusions before it is
/// returned; std::logic_error if that fails, std::invalid_argument if X does
/// not satisfy F1-F6 with w.
EquivalenceWitness roundtrip_GF(const FinFibrousPreorder& x, const SpatialWitness& w);

struct RandomSpatialInstance {
  FinFibrousPreorder X;
  SpatialWitness w;
};

/// A seeded pseudo-random spatial fibrous preorder with 1 <= nB <= max_points
/// and nA <= max_elements. Elements are drawn as random neighbourhood sets,
/// repaired until F1-F6 are satisfiable, and ∂, s, m are chosen at random
/// among the admissible values.
RandomSpatialInstance random_spatial_preorder(std::uint64_t seed, std::size_t max_points = 5,
                                              std::size_t max_elements = 12);

}  // namespace fibrous
