#pragma once

#include <cstddef>
#include <vector>

#include "fibrous/point_set.hpp"
#include "fibrous/report.hpp"

namespace fibrous {

/// A family of subsets of {0..nB-1}, kept in canonical order (ascending by
/// bit value). Duplicates are retained so that validate_topology can report
/// them; nothing else is enforced on construction.
class FiniteTopology {
 public:
  FiniteTopology() = default;
  FiniteTopology(std::size_t nB, std::vector<PointSet> opens);

  static FiniteTopology discrete(std::size_t nB);
  static FiniteTopology indiscrete(std::size_t nB);
  /// {∅, {1}, {0,1}}
  static FiniteTopology sierpinski();

  std::size_t nB() const noexcept { return nB_; }
  const std::vector<PointSet>& opens() const noexcept { return opens_; }

  bool is_open(const PointSet& s) const;

  friend bool operator==(const FiniteTopology&, const FiniteTopology&) = default;
  friend bool operator<(const FiniteTopology& a, const FiniteTopology& b) {
    if (a.nB_ != b.nB_) return a.nB_ < b.nB_;
    return a.opens_ < b.opens_;
  }

 private:
  std::size_t nB_ = 0;
  std::vector<PointSet> opens_;
};

/// Tags: T-empty, T-full, T-union, T-intersection, T-duplicate.
AxiomReport validate_topology(const FiniteTopology& t);

struct Specialization {
  std::vector<PointSet> theta;  // θ_x: the least open set containing x
  std::vector<PointSet> leq;    // x ≤ y  <=>  y ∈ leq[x] = θ_x

  bool le(std::size_t x, std::size_t y) const { return leq.at(x).contains(y); }
};

Specialization specialization(const FiniteTopology& t);

/// True when distinct points are never specialization-equivalent.
bool is_t0(const FiniteTopology& t);

inline constexpr std::size_t kMaxEnumerationPoints = 4;

/// Every topology on n points, sorted. Brute force over all families for
/// n <= 3, closure generator for n = 4. Throws std::invalid_argument above 4.
std::vector<FiniteTopology> enumerate_topologies(std::size_t n);

/// Filters all 2^(2^n) families of subsets through validate_topology.
std::vector<FiniteTopology> enumerate_topologies_brute(std::size_t n);

/// Explores from the indiscrete topology, adjoining one subset at a time and
/// closing under unions and intersections until no new topology appears.
std::vector<FiniteTopology> enumerate_topologies_by_closure(std::size_t n);

/// Smallest family containing `generators`, ∅ and the full set, closed under
/// pairwise unions and intersections.
FiniteTopology close_family(std::size_t nB, const std::vector<PointSet>& generators);

/// Preimage of `s` under a point map f: {0..f.size()-1} -> {0..s.universe()-1}.
PointSet preimage(const std::vector<std::size_t>& f, const PointSet& s);

}  // namespace fibrous
