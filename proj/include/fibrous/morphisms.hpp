#pragma once

#include <span>
#include <tuple>
#include <vector>

#include "fibrous/finite_core.hpp"

namespace fibrous {

/// A fibrous morphism X -> X': a base map f: B -> B' with a lifting f* defined
/// on the fibre product A'_f = {(a', b) | p'(a') = f(b)}.
///
/// The shape of both ends is recorded so that composition and parallelism can
/// be checked without the objects at hand.
class FibrousMorphism {
 public:
  using Lift = std::tuple<Index, Index, Index>;  // (a', b, f*(a', b))

  FibrousMorphism() = default;

  /// Throws StructureError unless f maps into B' and f* is defined exactly on
  /// A'_f with values in A.
  FibrousMorphism(const FinFibrousPreorder& source, const FinFibrousPreorder& target,
                  std::vector<Index> f, std::span<const Lift> lift);

  const std::vector<Index>& f() const noexcept { return f_; }
  Index f(Index b) const { return f_.at(b); }

  /// f*(a', b); throws StructureError off A'_f.
  Index lift(Index a_target, Index b) const;

  std::vector<Lift> lift_table() const;

  std::size_t source_nB() const noexcept { return f_.size(); }
  std::size_t source_nA() const noexcept { return source_nA_; }
  std::size_t target_nB() const noexcept { return target_nB_; }
  std::size_t target_nA() const noexcept { return target_nA_; }

  bool parallel_to(const FibrousMorphism& o) const noexcept {
    return source_nB() == o.source_nB() && source_nA_ == o.source_nA_ && target_nB_ == o.target_nB_ &&
           target_nA_ == o.target_nA_;
  }

 private:
  friend FibrousMorphism compose(const FibrousMorphism&, const FibrousMorphism&);

  std::vector<Index> f_;
  std::size_t source_nA_ = 0;
  std::size_t target_nB_ = 0;
  std::size_t target_nA_ = 0;
  std::vector<Index> lift_;  // dense target_nA x source_nB, kUndefined off A'_f
};

/// Conditions (1) p f*(a',b) = b  (tag MOR1) and
/// (2) N(f*(a',b)) ⊆ f⁻¹(N'(a'))  (tag MOR2) over all of A'_f.
/// Throws StructureError when the morphism's shape does not match X, X'.
AxiomReport verify_morphism(const FinFibrousPreorder& source, const FinFibrousPreorder& target,
                            const FibrousMorphism& m, CheckOptions opts = {});

/// (g, g*) ∘ (f, f*) = (gf, h) with h(a'', b) = f*(g*(a'', f(b)), b).
/// `first` is X -> X', `second` is X' -> X''.
FibrousMorphism compose(const FibrousMorphism& first, const FibrousMorphism& second);

/// f = id, f*(a, p(a)) = a.
FibrousMorphism identity_morphism(const FinFibrousPreorder& x);

/// Morphisms are identified when their base maps agree; liftings are ignored.
/// Throws StructureError for non-parallel morphisms.
bool equivalent(const FibrousMorphism& m1, const FibrousMorphism& m2);

}  // namespace fibrous
