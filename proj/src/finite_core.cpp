#include "fibrous/finite_core.hpp"

#include <string>

namespace fibrous {

namespace {

std::string idx(Index i) { return std::to_string(i); }

}  // namespace

FinFibrousPreorder::FinFibrousPreorder(std::size_t nB, std::vector<Index> p,
                                       std::vector<PointSet> relation,
                                       std::span<const Transport> transport)
    : nB_(nB), p_(std::move(p)), relation_(std::move(relation)) {
  const std::size_t nA = p_.size();
  if (relation_.size() != nA)
    throw StructureError("R has " + idx(relation_.size()) + " rows, expected nA = " + idx(nA));
  for (Index a = 0; a < nA; ++a) {
    if (p_[a] >= nB_) throw StructureError("p(" + idx(a) + ") = " + idx(p_[a]) + " out of range");
    if (relation_[a].universe() != nB_)
      throw StructureError("R row " + idx(a) + " is not a subset of B");
  }
  transport_.assign(nA * nB_, kUndefined);
  for (const auto& [a, b, t] : transport) {
    if (a >= nA || b >= nB_ || t >= nA)
      throw StructureError("d entry (" + idx(a) + "," + idx(b) + "," + idx(t) + ") out of range");
    if (!relation_[a].contains(b))
      throw StructureError("d defined at (" + idx(a) + "," + idx(b) + ") which is not in R");
    auto& slot = transport_[a * nB_ + b];
    if (slot != kUndefined && slot != t)
      throw StructureError("d defined twice at (" + idx(a) + "," + idx(b) + ")");
    slot = t;
  }
  for (Index a = 0; a < nA; ++a)
    relation_[a].for_each([&](std::size_t b) {
      if (transport_[a * nB_ + b] == kUndefined)
        throw StructureError("d undefined at (" + idx(a) + "," + idx(b) + ") in R");
    });
}

const PointSet& FinFibrousPreorder::neighborhood(Index a) const {
  if (a >= nA()) throw StructureError("element " + idx(a) + " out of range");
  return relation_[a];
}

Index FinFibrousPreorder::transport(Index a, Index b) const {
  if (a >= nA() || b >= nB_) throw StructureError("d queried out of range");
  Index t = transport_[a * nB_ + b];
  if (t == kUndefined) throw StructureError("d undefined at (" + idx(a) + "," + idx(b) + ")");
  return t;
}

std::vector<Index> FinFibrousPreorder::fiber(Index x) const {
  std::vector<Index> out;
  for (Index a = 0; a < nA(); ++a)
    if (p_[a] == x) out.push_back(a);
  return out;
}

std::vector<FinFibrousPreorder::Transport> FinFibrousPreorder::transport_table() const {
  std::vector<Transport> out;
  for (Index a = 0; a < nA(); ++a)
    relation_[a].for_each([&](std::size_t b) { out.emplace_back(a, b, transport_[a * nB_ + b]); });
  return out;
}

SpatialWitness::SpatialWitness(const FinFibrousPreorder& x, std::vector<Index> section,
                               std::span<const Meet> meet)
    : nA_(x.nA()), section_(std::move(section)) {
  if (section_.size() != x.nB())
    throw StructureError("s must be total on B (" + idx(x.nB()) + " points)");
  for (auto a : section_)
    if (a >= nA_) throw StructureError("s value " + idx(a) + " out of range");
  meet_.assign(nA_ * nA_, kUndefined);
  for (const auto& [a, a2, t] : meet) {
    if (a >= nA_ || a2 >= nA_ || t >= nA_) throw StructureError("m entry out of range");
    if (x.p(a) != x.p(a2))
      throw StructureError("m defined at (" + idx(a) + "," + idx(a2) + ") across different fibres");
    auto& slot = meet_[a * nA_ + a2];
    if (slot != kUndefined && slot != t)
      throw StructureError("m defined twice at (" + idx(a) + "," + idx(a2) + ")");
    slot = t;
  }
  for (Index a = 0; a < nA_; ++a)
    for (Index a2 = 0; a2 < nA_; ++a2)
      if (x.p(a) == x.p(a2) && meet_[a * nA_ + a2] == kUndefined)
        throw StructureError("m undefined at (" + idx(a) + "," + idx(a2) + ")");
}

Index SpatialWitness::m(Index a, Index a2) const {
  if (a >= nA_ || a2 >= nA_) throw StructureError("m queried out of range");
  Index t = meet_[a * nA_ + a2];
  if (t == kUndefined) throw StructureError("m undefined at (" + idx(a) + "," + idx(a2) + ")");
  return t;
}

std::vector<SpatialWitness::Meet> SpatialWitness::meet_table() const {
  std::vector<Meet> out;
  for (Index a = 0; a < nA_; ++a)
    for (Index a2 = 0; a2 < nA_; ++a2)
      if (meet_[a * nA_ + a2] != kUndefined) out.emplace_back(a, a2, meet_[a * nA_ + a2]);
  return out;
}

AxiomReport check_axioms(const FinFibrousPreorder& x, const SpatialWitness* w, CheckOptions opts) {
  ViolationSink sink(opts.verbose);
  for (Index a = 0; a < x.nA(); ++a) {
    const PointSet& na = x.neighborhood(a);
    sink.count();
    if (!na.contains(x.p(a))) sink.add("F2", json::array({a}), "p(a) not in N(a)");
    na.for_each([&](std::size_t b) {
      Index t = x.transport(a, b);
      sink.count(2);
      if (x.p(t) != b) sink.add("F1", json::array({a, b}), "p(d(a,b)) = " + idx(x.p(t)));
      PointSet extra = x.neighborhood(t) - na;
      if (!extra.empty()) sink.add("F3", json::array({a, b, extra.first()}), "N(d(a,b)) not in N(a)");
    });
  }
  if (w != nullptr) {
    for (Index y = 0; y < x.nB(); ++y) {
      sink.count();
      if (x.p(w->s(y)) != y) sink.add("F4", json::array({y}), "p(s(y)) != y");
    }
    for (Index a = 0; a < x.nA(); ++a)
      for (Index a2 = 0; a2 < x.nA(); ++a2) {
        if (x.p(a) != x.p(a2)) continue;
        Index mm = w->m(a, a2);
        sink.count(2);
        if (x.p(mm) != x.p(a)) sink.add("F5", json::array({a, a2}), "p(m(a,a')) != p(a)");
        PointSet extra = x.neighborhood(mm) - (x.neighborhood(a) & x.neighborhood(a2));
        if (!extra.empty())
          sink.add("F6", json::array({a, a2, extra.first()}), "N(m(a,a')) not in N(a) ∩ N(a')");
      }
  }
  return sink.take();
}

namespace {

// For every a in X some a' in Y with p'(a') = p(a) and N'(a') ⊆ N(a): a itself
// when admissible, otherwise the least admissible index.
std::optional<std::vector<Index>> directed_search(const FinFibrousPreorder& x,
                                                  const FinFibrousPreorder& y) {
  std::vector<Index> map(x.nA(), kUndefined);
  for (Index a = 0; a < x.nA(); ++a) {
    if (a < y.nA() && y.p(a) == x.p(a) && y.neighborhood(a).is_subset_of(x.neighborhood(a))) {
      map[a] = a;
      continue;
    }
    for (Index b = 0; b < y.nA(); ++b) {
      if (y.p(b) == x.p(a) && y.neighborhood(b).is_subset_of(x.neighborhood(a))) {
        map[a] = b;
        break;
      }
    }
    if (map[a] == kUndefined) return std::nullopt;
  }
  return map;
}

}  // namespace

std::optional<EquivalenceWitness> find_equivalence(const FinFibrousPreorder& x,
                                                   const FinFibrousPreorder& y) {
  if (x.nB() != y.nB())
    throw StructureError("equivalence requires a shared base: " + idx(x.nB()) + " vs " + idx(y.nB()));
  auto phi = directed_search(x, y);
  if (!phi) return std::nullopt;
  auto gamma = directed_search(y, x);
  if (!gamma) return std::nullopt;
  return EquivalenceWitness{std::move(*phi), std::move(*gamma)};
}

AxiomReport verify_equivalence(const FinFibrousPreorder& x, const FinFibrousPreorder& y,
                               const EquivalenceWitness& w, CheckOptions opts) {
  if (x.nB() != y.nB()) throw StructureError("equivalence requires a shared base");
  if (w.phi.size() != x.nA() || w.gamma.size() != y.nA())
    throw StructureError("witness maps have the wrong length");
  ViolationSink sink(opts.verbose);
  for (Index a = 0; a < x.nA(); ++a) {
    Index b = w.phi[a];
    if (b >= y.nA()) throw StructureError("phi value out of range");
    sink.count();
    if (y.p(b) != x.p(a)) sink.add("F9", json::array({a}), "p'(phi(a)) != p(a)");
    PointSet extra = y.neighborhood(b) - x.neighborhood(a);
    if (!extra.empty()) sink.add("F9", json::array({a, extra.first()}), "N'(phi(a)) not in N(a)");
  }
  for (Index b = 0; b < y.nA(); ++b) {
    Index a = w.gamma[b];
    if (a >= x.nA()) throw StructureError("gamma value out of range");
    sink.count();
    if (x.p(a) != y.p(b)) sink.add("F10", json::array({b}), "p(gamma(a')) != p'(a')");
    PointSet extra = x.neighborhood(a) - y.neighborhood(b);
    if (!extra.empty()) sink.add("F10", json::array({b, extra.first()}), "N(gamma(a')) not in N'(a')");
  }
  return sink.take();
}

std::optional<UMap> find_umap(const FinFibrousPreorder& x) {
  UMap out;
  out.u.assign(x.nB(), kUndefined);
  std::vector<std::vector<Index>> fibers(x.nB());
  for (Index a = 0; a < x.nA(); ++a) fibers[x.p(a)].push_back(a);
  for (Index pt = 0; pt < x.nB(); ++pt) {
    for (Index cand : fibers[pt]) {
      bool least = true;
      for (Index other : fibers[pt])
        if (!x.neighborhood(cand).is_subset_of(x.neighborhood(other))) {
          least = false;
          break;
        }
      if (least) {
        out.u[pt] = cand;
        break;
      }
    }
    if (out.u[pt] == kUndefined) return std::nullopt;
    out.order.push_back(x.neighborhood(out.u[pt]));
  }
  return out;
}

FinFibrousPreorder from_preorder(std::span<const PointSet> leq) {
  const std::size_t n = leq.size();
  std::vector<Index> p(n);
  std::vector<FinFibrousPreorder::Transport> d;
  for (Index x = 0; x < n; ++x) {
    p[x] = x;
    if (leq[x].universe() != n) throw StructureError("preorder row has the wrong universe");
    leq[x].for_each([&](std::size_t y) { d.emplace_back(x, y, y); });
  }
  return FinFibrousPreorder(n, std::move(p), std::vector<PointSet>(leq.begin(), leq.end()), d);
}

SpatialWitness preorder_spatial_witness(const FinFibrousPreorder& x) {
  std::vector<Index> s(x.nB(), kUndefined);
  std::vector<SpatialWitness::Meet> m;
  for (Index a = 0; a < x.nA(); ++a) {
    if (s[x.p(a)] != kUndefined) throw StructureError("p is not injective; fibres are not singletons");
    s[x.p(a)] = a;
    m.emplace_back(a, a, a);
  }
  for (auto v : s)
    if (v == kUndefined) throw StructureError("p is not surjective");
  return SpatialWitness(x, std::move(s), m);
}

}  // namespace fibrous
