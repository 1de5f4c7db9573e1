#include "fibrous/functors.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>

namespace fibrous {

std::optional<Index> GImage::find(const PointSet& u, Index x) const {
  auto it = index_.find({u, x});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GImage functor_G_obj(const FiniteTopology& t) {
  const std::size_t nB = t.nB();
  GImage g;
  std::vector<Index> p;
  std::vector<PointSet> rel;
  for (const auto& u : t.opens())
    u.for_each([&](std::size_t x) {
      g.index_.emplace(GImage::Label{u, x}, g.labels.size());
      g.labels.emplace_back(u, x);
      p.push_back(x);
      rel.push_back(u);
    });
  // ∂((U,x), y) = (U, y)
  std::vector<FinFibrousPreorder::Transport> d;
  for (Index a = 0; a < g.labels.size(); ++a) {
    const auto& u = g.labels[a].first;
    u.for_each([&](std::size_t y) { d.emplace_back(a, y, g.index_.at({u, y})); });
  }
  g.X = FinFibrousPreorder(nB, std::move(p), std::move(rel), d);

  // s(x) = (B, x), m((U,x),(V,x)) = (U ∩ V, x)
  const PointSet full = PointSet::full(nB);
  std::vector<Index> s(nB);
  for (Index x = 0; x < nB; ++x) {
    auto it = g.index_.find({full, x});
    if (it == g.index_.end()) throw StructureError("G applied to a family without the full set");
    s[x] = it->second;
  }
  std::vector<SpatialWitness::Meet> m;
  for (Index a = 0; a < g.labels.size(); ++a)
    for (Index b = 0; b < g.labels.size(); ++b) {
      if (g.labels[a].second != g.labels[b].second) continue;
      auto it = g.index_.find({g.labels[a].first & g.labels[b].first, g.labels[a].second});
      if (it == g.index_.end()) throw StructureError("G applied to a family not closed under intersection");
      m.emplace_back(a, b, it->second);
    }
  g.w = SpatialWitness(g.X, std::move(s), m);
  return g;
}

NotContinuous::NotContinuous(PointSet open, PointSet pre)
    : std::invalid_argument("map is not continuous: preimage " + pre.to_string() + " of open set " +
                            open.to_string() + " is not open"),
      open_(std::move(open)),
      preimage_(std::move(pre)) {}

std::optional<PointSet> continuity_violation(const std::vector<Index>& f, const FiniteTopology& source,
                                             const FiniteTopology& target) {
  if (f.size() != source.nB()) throw StructureError("point map is not total on the source");
  for (auto v : f)
    if (v >= target.nB()) throw StructureError("point map leaves the target");
  for (const auto& u : target.opens())
    if (!source.is_open(preimage(f, u))) return u;
  return std::nullopt;
}

FibrousMorphism functor_G_mor(const std::vector<Index>& f, const GImage& source, const GImage& target,
                              const FiniteTopology& source_top, const FiniteTopology& target_top) {
  if (auto bad = continuity_violation(f, source_top, target_top)) throw NotContinuous(*bad, preimage(f, *bad));
  std::vector<FibrousMorphism::Lift> lift;
  for (Index at = 0; at < target.labels.size(); ++at) {
    const auto& [u_target, x_target] = target.labels[at];
    PointSet pre = preimage(f, u_target);
    for (Index y = 0; y < f.size(); ++y) {
      if (f[y] != x_target) continue;
      auto a = source.find(pre, y);
      if (!a) throw std::logic_error("preimage open set missing from G image");
      lift.emplace_back(at, y, *a);
    }
  }
  return FibrousMorphism(source.X, target.X, f, lift);
}

FibrousMorphism functor_G_mor(const std::vector<Index>& f, const FiniteTopology& source,
                              const FiniteTopology& target) {
  if (auto bad = continuity_violation(f, source, target)) throw NotContinuous(*bad, preimage(f, *bad));
  return functor_G_mor(f, functor_G_obj(source), functor_G_obj(target), source, target);
}

namespace {

FiniteTopology opens_by_union_closure(const FinFibrousPreorder& x) {
  std::vector<PointSet> basis;
  for (Index a = 0; a < x.nA(); ++a) basis.push_back(x.neighborhood(a));
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

  std::unordered_set<PointSet, PointSetHash> family{PointSet(x.nB())};
  for (const auto& b : basis) {
    std::vector<PointSet> current(family.begin(), family.end());
    for (const auto& u : current) family.insert(u | b);
  }
  return FiniteTopology(x.nB(), std::vector<PointSet>(family.begin(), family.end()));
}

FiniteTopology opens_by_brute_force(const FinFibrousPreorder& x) {
  const std::size_t nB = x.nB();
  std::vector<PointSet> opens;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << nB); ++bits) {
    PointSet o = PointSet::from_bits(nB, bits);
    bool open = true;
    o.for_each([&](std::size_t y) {
      if (!open) return;
      bool found = false;
      for (Index a = 0; a < x.nA() && !found; ++a) found = x.p(a) == y && x.neighborhood(a).is_subset_of(o);
      open = found;
    });
    if (open) opens.push_back(std::move(o));
  }
  return FiniteTopology(nB, std::move(opens));
}

}  // namespace

FiniteTopology functor_F_obj(const FinFibrousPreorder& x, const SpatialWitness& /*w*/,
                             OpenSetAlgorithm algorithm, std::size_t brute_limit) {
  if (algorithm == OpenSetAlgorithm::union_closure) return opens_by_union_closure(x);
  if (x.nB() > brute_limit || x.nB() >= 63)
    throw InstanceTooLarge("brute open-set search over " + std::to_string(x.nB()) + " points exceeds the limit of " +
                           std::to_string(brute_limit));
  return opens_by_brute_force(x);
}

AxiomReport roundtrip_FG(const FiniteTopology& t) {
  ViolationSink sink(true);
  GImage g = functor_G_obj(t);
  FiniteTopology back = functor_F_obj(g.X, g.w);
  sink.count(t.opens().size());
  std::vector<PointSet> lost, gained;
  std::set_difference(t.opens().begin(), t.opens().end(), back.opens().begin(), back.opens().end(),
                      std::back_inserter(lost));
  std::set_difference(back.opens().begin(), back.opens().end(), t.opens().begin(), t.opens().end(),
                      std::back_inserter(gained));
  for (const auto& u : lost) sink.add("FG", json(u.to_vector()), "open set lost by F(G(T))");
  for (const auto& u : gained) sink.add("FG", json(u.to_vector()), "open set introduced by F(G(T))");
  return sink.take();
}

EquivalenceWitness roundtrip_GF(const FinFibrousPreorder& x, const SpatialWitness& w) {
  if (!check_axioms(x, w).passed()) throw std::invalid_argument("roundtrip_GF requires a spatial fibrous preorder");
  GImage gbar = functor_G_obj(functor_F_obj(x, w));
  EquivalenceWitness out;
  for (Index a = 0; a < x.nA(); ++a) {
    auto target = gbar.find(x.neighborhood(a), x.p(a));
    if (!target) throw std::logic_error("N(a) is not open in F(X)");
    out.phi.push_back(*target);
  }
  for (const auto& [u, pt] : gbar.labels) {
    Index chosen = kUndefined;
    for (Index a = 0; a < x.nA(); ++a)
      if (x.p(a) == pt && x.neighborhood(a).is_subset_of(u)) {
        chosen = a;
        break;
      }
    if (chosen == kUndefined) throw std::logic_error("no element realizes an open neighbourhood of F(X)");
    out.gamma.push_back(chosen);
  }
  auto report = verify_equivalence(x, gbar.X, out);
  if (!report.passed())
    throw std::logic_error("GF equivalence witness failed verification: " + report.violations.front().tag);
  return out;
}

RandomSpatialInstance random_spatial_preorder(std::uint64_t seed, std::size_t max_points, std::size_t max_elements) {
  if (max_points == 0 || max_elements < max_points)
    throw std::invalid_argument("random_spatial_preorder needs 1 <= max_points <= max_elements");
  std::mt19937_64 rng(seed);
  auto coin = [&] { return (rng() & 1U) != 0; };
  auto below = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  struct Elem {
    Index x;
    PointSet n;
  };
  for (;;) {
    const std::size_t nB = 1 + below(max_points);
    auto random_nbhd = [&](Index x) {
      PointSet s(nB);
      s.insert(x);
      for (Index y = 0; y < nB; ++y)
        if (coin() && coin()) s.insert(y);
      return s;
    };
    std::vector<Elem> elems;
    for (Index y = 0; y < nB; ++y) elems.push_back({y, random_nbhd(y)});
    for (std::size_t extra = below(3); extra > 0; --extra) {
      Index y = below(nB);
      elems.push_back({y, random_nbhd(y)});
    }

    auto has_below = [&](Index over, const PointSet& bound) {
      return std::any_of(elems.begin(), elems.end(),
                         [&](const Elem& e) { return e.x == over && e.n.is_subset_of(bound); });
    };
    bool grew = true;
    while (grew && elems.size() <= max_elements) {
      grew = false;
      for (std::size_t i = 0; i < elems.size() && !grew; ++i) {
        Elem e = elems[i];
        e.n.for_each([&](std::size_t b) {
          if (!grew && !has_below(b, e.n)) {
            elems.push_back({b, e.n});
            grew = true;
          }
        });
        for (std::size_t j = 0; j < elems.size() && !grew; ++j) {
          if (elems[j].x != e.x) continue;
          PointSet meet = e.n & elems[j].n;
          if (!has_below(e.x, meet)) {
            elems.push_back({e.x, meet});
            grew = true;
          }
        }
      }
    }
    if (elems.size() > max_elements) continue;
    if (elems.size() < max_elements && coin()) elems.push_back(elems[below(elems.size())]);
    std::shuffle(elems.begin(), elems.end(), rng);

    const std::size_t nA = elems.size();
    auto pick = [&](Index over, const PointSet& bound) {
      std::vector<Index> ok;
      for (Index a = 0; a < nA; ++a)
        if (elems[a].x == over && elems[a].n.is_subset_of(bound)) ok.push_back(a);
      return ok[below(ok.size())];
    };
    std::vector<Index> p;
    std::vector<PointSet> rel;
    for (const auto& e : elems) {
      p.push_back(e.x);
      rel.push_back(e.n);
    }
    std::vector<FinFibrousPreorder::Transport> d;
    for (Index a = 0; a < nA; ++a)
      elems[a].n.for_each([&](std::size_t b) { d.emplace_back(a, b, pick(b, elems[a].n)); });
    FinFibrousPreorder X(nB, std::move(p), std::move(rel), d);

    std::vector<Index> s(nB);
    for (Index y = 0; y < nB; ++y) s[y] = pick(y, PointSet::full(nB));
    std::vector<SpatialWitness::Meet> m;
    for (Index a = 0; a < nA; ++a)
      for (Index b = 0; b < nA; ++b)
        if (elems[a].x == elems[b].x) m.emplace_back(a, b, pick(elems[a].x, elems[a].n & elems[b].n));
    SpatialWitness w(X, std::move(s), m);
    return {std::move(X), std::move(w)};
  }
}

}  // namespace fibrous
