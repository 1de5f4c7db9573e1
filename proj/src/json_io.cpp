#include "fibrous/json_io.hpp"

namespace fibrous::io {

namespace {

template <class Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw StructureError(std::string("malformed ") + what + ": " + e.what());
  }
}

json point_list(const PointSet& s) { return s.to_vector(); }

PointSet read_point_list(const json& j, std::size_t universe) {
  PointSet s(universe);
  for (const auto& v : j) {
    auto x = v.get<std::size_t>();
    if (x >= universe) throw StructureError("point " + std::to_string(x) + " out of range");
    s.insert(x);
  }
  return s;
}

std::vector<std::tuple<Index, Index, Index>> read_triples(const json& j, const char* field) {
  std::vector<std::tuple<Index, Index, Index>> out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw StructureError(std::string(field) + " entries must be triples");
    out.emplace_back(t[0].get<Index>(), t[1].get<Index>(), t[2].get<Index>());
  }
  return out;
}

}  // namespace

json write_preorder(const FinFibrousPreorder& x, const SpatialWitness* w) {
  json rel = json::array();
  for (Index a = 0; a < x.nA(); ++a) rel.push_back(point_list(x.neighborhood(a)));
  json d = json::array();
  for (const auto& [a, b, t] : x.transport_table()) d.push_back({a, b, t});
  json out{{"nB", x.nB()}, {"nA", x.nA()}, {"p", x.projection()}, {"R", rel}, {"d", d}};
  if (w != nullptr) {
    out["s"] = w->section();
    json m = json::array();
    for (const auto& [a, a2, t] : w->meet_table()) m.push_back({a, a2, t});
    out["m"] = m;
  }
  return out;
}

PreorderDocument read_preorder(const json& j) {
  return guarded("fibrous preorder", [&] {
    if (!j.is_object()) throw StructureError("fibrous preorder must be a JSON object");
    const auto nB = j.at("nB").get<std::size_t>();
    const auto nA = j.at("nA").get<std::size_t>();
    auto p = j.at("p").get<std::vector<Index>>();
    if (p.size() != nA) throw StructureError("p must have nA entries");
    const json& rj = j.at("R");
    if (!rj.is_array() || rj.size() != nA) throw StructureError("R must have nA rows");
    std::vector<PointSet> rel;
    for (const auto& row : rj) rel.push_back(read_point_list(row, nB));
    auto d = read_triples(j.at("d"), "d");
    PreorderDocument doc{FinFibrousPreorder(nB, std::move(p), std::move(rel), d), std::nullopt};
    const bool has_s = j.contains("s"), has_m = j.contains("m");
    if (has_s != has_m) throw StructureError("a spatial witness needs both s and m");
    if (has_s) {
      auto m = read_triples(j.at("m"), "m");
      doc.w = SpatialWitness(doc.X, j.at("s").get<std::vector<Index>>(), m);
    }
    return doc;
  });
}

json write_topology(const FiniteTopology& t) {
  json opens = json::array();
  for (const auto& u : t.opens()) opens.push_back(point_list(u));
  return json{{"nB", t.nB()}, {"opens", opens}};
}

FiniteTopology read_topology(const json& j) {
  return guarded("topology", [&] {
    if (!j.is_object()) throw StructureError("topology must be a JSON object");
    const auto nB = j.at("nB").get<std::size_t>();
    std::vector<PointSet> opens;
    for (const auto& u : j.at("opens")) opens.push_back(read_point_list(u, nB));
    return FiniteTopology(nB, std::move(opens));
  });
}

json write_morphism(const FibrousMorphism& m) {
  json lift = json::array();
  for (const auto& [at, b, a] : m.lift_table()) lift.push_back({at, b, a});
  return json{{"f", m.f()}, {"fstar", lift}};
}

FibrousMorphism read_morphism(const json& j, const FinFibrousPreorder& source, const FinFibrousPreorder& target) {
  return guarded("fibrous morphism", [&] {
    if (!j.is_object()) throw StructureError("morphism must be a JSON object");
    auto lift = read_triples(j.at("fstar"), "fstar");
    return FibrousMorphism(source, target, j.at("f").get<std::vector<Index>>(), lift);
  });
}

json write_equivalence(const EquivalenceWitness& w) { return json{{"phi", w.phi}, {"gamma", w.gamma}}; }

json write_umap(const UMap& u) {
  json order = json::array();
  for (Index x = 0; x < u.order.size(); ++x)
    u.order[x].for_each([&](std::size_t y) { order.push_back({x, y}); });
  return json{{"u", u.u}, {"R0", order}};
}

}  // namespace fibrous::io
