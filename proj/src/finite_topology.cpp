#include "fibrous/finite_topology.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace fibrous {

FiniteTopology::FiniteTopology(std::size_t nB, std::vector<PointSet> opens) : nB_(nB), opens_(std::move(opens)) {
  for (const auto& u : opens_)
    if (u.universe() != nB_) throw StructureError("open set over the wrong universe");
  std::sort(opens_.begin(), opens_.end());
}

FiniteTopology FiniteTopology::discrete(std::size_t nB) {
  if (nB > 20) throw std::invalid_argument("discrete topology on more than 20 points");
  std::vector<PointSet> opens;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << nB); ++bits)
    opens.push_back(PointSet::from_bits(nB, bits));
  return FiniteTopology(nB, std::move(opens));
}

FiniteTopology FiniteTopology::indiscrete(std::size_t nB) {
  if (nB == 0) return FiniteTopology(0, {PointSet(0)});
  return FiniteTopology(nB, {PointSet(nB), PointSet::full(nB)});
}

FiniteTopology FiniteTopology::sierpinski() {
  return FiniteTopology(2, {PointSet(2), PointSet(2, {1}), PointSet(2, {0, 1})});
}

bool FiniteTopology::is_open(const PointSet& s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

AxiomReport validate_topology(const FiniteTopology& t) {
  ViolationSink sink(false);
  const auto& opens = t.opens();
  auto as_list = [](const PointSet& s) { return json(s.to_vector()); };
  sink.count(2);
  if (!t.is_open(PointSet(t.nB()))) sink.add("T-empty", json::array(), "empty set missing");
  if (!t.is_open(PointSet::full(t.nB()))) sink.add("T-full", as_list(PointSet::full(t.nB())), "full set missing");
  for (std::size_t i = 0; i + 1 < opens.size(); ++i)
    if (opens[i] == opens[i + 1]) sink.add("T-duplicate", as_list(opens[i]), "open set listed twice");
  for (std::size_t i = 0; i < opens.size(); ++i)
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      sink.count(2);
      if (auto u = opens[i] | opens[j]; !t.is_open(u))
        sink.add("T-union", json::array({as_list(opens[i]), as_list(opens[j])}), "union " + u.to_string() + " missing");
      if (auto v = opens[i] & opens[j]; !t.is_open(v))
        sink.add("T-intersection", json::array({as_list(opens[i]), as_list(opens[j])}),
                 "intersection " + v.to_string() + " missing");
    }
  return sink.take();
}

Specialization specialization(const FiniteTopology& t) {
  Specialization out;
  for (std::size_t x = 0; x < t.nB(); ++x) {
    PointSet theta = PointSet::full(t.nB());
    for (const auto& u : t.opens())
      if (u.contains(x)) theta &= u;
    out.theta.push_back(theta);
  }
  out.leq = out.theta;
  return out;
}

bool is_t0(const FiniteTopology& t) {
  auto sp = specialization(t);
  for (std::size_t x = 0; x < t.nB(); ++x)
    for (std::size_t y = x + 1; y < t.nB(); ++y)
      if (sp.le(x, y) && sp.le(y, x)) return false;
  return true;
}

FiniteTopology close_family(std::size_t nB, const std::vector<PointSet>& generators) {
  std::set<PointSet> family{PointSet(nB), PointSet::full(nB)};
  family.insert(generators.begin(), generators.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PointSet> members(family.begin(), family.end());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        grew |= family.insert(members[i] | members[j]).second;
        grew |= family.insert(members[i] & members[j]).second;
      }
  }
  return FiniteTopology(nB, std::vector<PointSet>(family.begin(), family.end()));
}

namespace {

void check_enumeration_size(std::size_t n) {
  if (n > kMaxEnumerationPoints)
    throw std::invalid_argument("topology enumeration supports at most " + std::to_string(kMaxEnumerationPoints) +
                                " points, got " + std::to_string(n));
}

}  // namespace

std::vector<FiniteTopology> enumerate_topologies_brute(std::size_t n) {
  check_enumeration_size(n);
  const std::size_t subsets = std::size_t{1} << n;
  const std::uint64_t families = std::uint64_t{1} << subsets;
  const std::uint64_t empty_bit = 1, full_bit = std::uint64_t{1} << (subsets - 1);
  std::vector<FiniteTopology> out;
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    if ((fam & empty_bit) == 0 || (fam & full_bit) == 0) continue;
    bool closed = true;
    for (std::size_t u = 0; u < subsets && closed; ++u) {
      if (((fam >> u) & 1U) == 0) continue;
      for (std::size_t v = u + 1; v < subsets; ++v) {
        if (((fam >> v) & 1U) == 0) continue;
        if (((fam >> (u | v)) & 1U) == 0 || ((fam >> (u & v)) & 1U) == 0) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<PointSet> opens;
    for (std::size_t u = 0; u < subsets; ++u)
      if ((fam >> u) & 1U) opens.push_back(PointSet::from_bits(n, u));
    out.emplace_back(n, std::move(opens));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FiniteTopology> enumerate_topologies_by_closure(std::size_t n) {
  check_enumeration_size(n);
  const std::size_t subsets = std::size_t{1} << n;
  std::set<FiniteTopology> seen;
  std::deque<FiniteTopology> queue;
  auto start = FiniteTopology::indiscrete(n);
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    FiniteTopology t = std::move(queue.front());
    queue.pop_front();
    for (std::size_t u = 0; u < subsets; ++u) {
      PointSet s = PointSet::from_bits(n, u);
      if (t.is_open(s)) continue;
      std::vector<PointSet> gens = t.opens();
      gens.push_back(s);
      auto next = close_family(n, gens);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<FiniteTopology> enumerate_topologies(std::size_t n) {
  check_enumeration_size(n);
  return n <= 3 ? enumerate_topologies_brute(n) : enumerate_topologies_by_closure(n);
}

PointSet preimage(const std::vector<std::size_t>& f, const PointSet& s) {
  PointSet out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x)
    if (s.contains(f[x])) out.insert(x);
  return out;
}

}  // namespace fibrous
