#include "fibrous/morphisms.hpp"

#include <string>

namespace fibrous {

FibrousMorphism::FibrousMorphism(const FinFibrousPreorder& source, const FinFibrousPreorder& target,
                                 std::vector<Index> f, std::span<const Lift> lift)
    : f_(std::move(f)), source_nA_(source.nA()), target_nB_(target.nB()), target_nA_(target.nA()) {
  const std::size_t nB = source.nB();
  if (f_.size() != nB) throw StructureError("f must be total on the source base");
  for (auto v : f_)
    if (v >= target_nB_) throw StructureError("f value " + std::to_string(v) + " out of range");
  lift_.assign(target_nA_ * nB, kUndefined);
  for (const auto& [at, b, a] : lift) {
    if (at >= target_nA_ || b >= nB || a >= source_nA_) throw StructureError("f* entry out of range");
    if (target.p(at) != f_[b])
      throw StructureError("f* defined at (" + std::to_string(at) + "," + std::to_string(b) +
                           ") outside the fibre product");
    auto& slot = lift_[at * nB + b];
    if (slot != kUndefined && slot != a) throw StructureError("f* defined twice");
    slot = a;
  }
  for (Index at = 0; at < target_nA_; ++at)
    for (Index b = 0; b < nB; ++b)
      if (target.p(at) == f_[b] && lift_[at * nB + b] == kUndefined)
        throw StructureError("f* undefined at (" + std::to_string(at) + "," + std::to_string(b) + ")");
}

Index FibrousMorphism::lift(Index a_target, Index b) const {
  if (a_target >= target_nA_ || b >= source_nB()) throw StructureError("f* queried out of range");
  Index v = lift_[a_target * source_nB() + b];
  if (v == kUndefined) throw StructureError("f* undefined outside the fibre product");
  return v;
}

std::vector<FibrousMorphism::Lift> FibrousMorphism::lift_table() const {
  std::vector<Lift> out;
  for (Index at = 0; at < target_nA_; ++at)
    for (Index b = 0; b < source_nB(); ++b)
      if (auto v = lift_[at * source_nB() + b]; v != kUndefined) out.emplace_back(at, b, v);
  return out;
}

AxiomReport verify_morphism(const FinFibrousPreorder& source, const FinFibrousPreorder& target,
                            const FibrousMorphism& m, CheckOptions opts) {
  if (m.source_nB() != source.nB() || m.source_nA() != source.nA() || m.target_nB() != target.nB() ||
      m.target_nA() != target.nA())
    throw StructureError("morphism shape does not match its source and target");
  ViolationSink sink(opts.verbose);
  for (Index at = 0; at < target.nA(); ++at) {
    for (Index b = 0; b < source.nB(); ++b) {
      if (target.p(at) != m.f(b)) continue;
      Index a = m.lift(at, b);
      sink.count(2);
      if (source.p(a) != b) sink.add("MOR1", json::array({at, b}), "p(f*(a',b)) != b");
      // N(f*(a',b)) ⊆ f⁻¹(N'(a'))
      const PointSet& allowed = target.neighborhood(at);
      source.neighborhood(a).for_each([&](std::size_t y) {
        if (!allowed.contains(m.f(y)))
          sink.add("MOR2", json::array({at, b, y}), "f*(a',b) R y but not a' R' f(y)");
      });
    }
  }
  return sink.take();
}

FibrousMorphism compose(const FibrousMorphism& first, const FibrousMorphism& second) {
  if (first.target_nB() != second.source_nB() || first.target_nA() != second.source_nA())
    throw StructureError("morphisms are not composable: codomain of the first is not the domain of the second");
  FibrousMorphism out;
  const std::size_t nB = first.source_nB();
  out.source_nA_ = first.source_nA();
  out.target_nB_ = second.target_nB();
  out.target_nA_ = second.target_nA();
  out.f_.resize(nB);
  for (Index b = 0; b < nB; ++b) out.f_[b] = second.f(first.f(b));
  out.lift_.assign(out.target_nA_ * nB, kUndefined);
  for (Index a2 = 0; a2 < out.target_nA_; ++a2)
    for (Index b = 0; b < nB; ++b) {
      Index mid = second.lift_[a2 * second.source_nB() + first.f(b)];
      if (mid == kUndefined) continue;  // (a'', b) not in A''_{gf}
      out.lift_[a2 * nB + b] = first.lift(mid, b);
    }
  return out;
}

FibrousMorphism identity_morphism(const FinFibrousPreorder& x) {
  std::vector<Index> f(x.nB());
  for (Index b = 0; b < x.nB(); ++b) f[b] = b;
  std::vector<FibrousMorphism::Lift> lift;
  for (Index a = 0; a < x.nA(); ++a) lift.emplace_back(a, x.p(a), a);
  return FibrousMorphism(x, x, std::move(f), lift);
}

bool equivalent(const FibrousMorphism& m1, const FibrousMorphism& m2) {
  if (!m1.parallel_to(m2)) throw StructureError("equivalence is only defined for parallel morphisms");
  return m1.f() == m2.f();
}

}  // namespace fibrous
