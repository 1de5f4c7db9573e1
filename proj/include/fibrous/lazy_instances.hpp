#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "fibrous/lazy_spaces.hpp"

namespace fibrous::lazy {

// Shared sampling helpers.
Natural sample_index(Rng& rng, unsigned max = 12);
Rational sample_rational(Rng& rng, long long range = 50, long long max_den = 24);
/// A point at distance at most 1.25 * radius from `center` in ℚ, biased to
/// stay inside the open ball.
Rational sample_in_interval(const Rational& center, const Rational& radius, Rng& rng);

/// Smallest integer strictly greater than n / (1 - n d); requires n d < 1.
Natural metric_delta_index(const Natural& n, const Rational& d);

/// A = ℕ⁺ × B with (n,x) R y iff d(x,y) < 1/n.
template <class Point>
class MetricOracle final : public NeighborhoodOracle<Point> {
 public:
  using typename NeighborhoodOracle<Point>::element_type;
  using Distance = std::function<Rational(const Point&, const Point&)>;
  using PointSampler = std::function<Point(Rng&)>;
  using BallSampler = std::function<Point(const Point& center, const Rational& radius, Rng&)>;

  MetricOracle(std::string name, Distance d, PointSampler points, BallSampler ball)
      : name_(std::move(name)), d_(std::move(d)), points_(std::move(points)), ball_(std::move(ball)) {}

  std::string name() const override { return name_; }
  Rational distance(const Point& x, const Point& y) const { return d_(x, y); }

  bool rel(const element_type& a, const Point& y) const override { return d_(a.point, y) * a.index < 1; }
  element_type delta(const element_type& a, const Point& y) const override {
    this->require_rel(a, y);
    return {metric_delta_index(a.index, d_(a.point, y)), y};
  }
  element_type unit(const Point& y) const override { return {Natural(1), y}; }
  element_type meet(const element_type& a, const element_type& a2) const override {
    this->require_same_fiber(a, a2);
    return {a.index * a2.index, a.point};
  }
  Point sample_point(Rng& rng) const override { return points_(rng); }
  element_type sample_element_over(const Point& x, Rng& rng) const override { return {sample_index(rng), x}; }
  Point sample_near(const element_type& a, Rng& rng) const override {
    return ball_(a.point, Rational(Integer(1), a.index), rng);
  }

 private:
  std::string name_;
  Distance d_;
  PointSampler points_;
  BallSampler ball_;
};

template <class Point>
std::shared_ptr<MetricOracle<Point>> mk_metric(std::string name, typename MetricOracle<Point>::Distance d,
                                               typename MetricOracle<Point>::PointSampler points,
                                               typename MetricOracle<Point>::BallSampler ball) {
  return std::make_shared<MetricOracle<Point>>(std::move(name), std::move(d), std::move(points), std::move(ball));
}

/// ℚ with |x - y|.
std::shared_ptr<MetricOracle<Rational>> metric_q();
/// ℚ² with the max-norm distance (exactly rational).
std::shared_ptr<MetricOracle<Q2>> metric_q2();

/// ℤ with (n,x) R y iff p^n | (y - x); ∂((n,x),y) = (n,y), m = (n+n', x).
class PadicOracle final : public NeighborhoodOracle<Integer> {
 public:
  explicit PadicOracle(unsigned long prime);

  std::string name() const override { return "padic:" + std::to_string(prime_); }
  unsigned long prime() const noexcept { return prime_; }

  bool rel(const element_type& a, const Integer& y) const override;
  element_type delta(const element_type& a, const Integer& y) const override;
  element_type unit(const Integer& y) const override { return {Natural(1), y}; }
  element_type meet(const element_type& a, const element_type& a2) const override;
  Integer sample_point(Rng& rng) const override;
  element_type sample_element_over(const Integer& x, Rng& rng) const override;
  Integer sample_near(const element_type& a, Rng& rng) const override;

 private:
  Integer modulus(const Natural& n) const;
  unsigned long prime_;
};

std::shared_ptr<PadicOracle> mk_padic(unsigned long prime);

/// Eventually periodic words over {0,2} with (n,u) R w iff u and w agree on
/// positions 1..n; ∂((n,u),w) = (n,w), m = (n n', u).
class CantorOracle final : public NeighborhoodOracle<EventuallyPeriodicWord> {
 public:
  std::string name() const override { return "cantor"; }
  bool rel(const element_type& a, const EventuallyPeriodicWord& w) const override;
  element_type delta(const element_type& a, const EventuallyPeriodicWord& w) const override;
  element_type unit(const EventuallyPeriodicWord& u) const override { return {Natural(1), u}; }
  element_type meet(const element_type& a, const element_type& a2) const override;
  EventuallyPeriodicWord sample_point(Rng& rng) const override;
  element_type sample_element_over(const EventuallyPeriodicWord& x, Rng& rng) const override;
  EventuallyPeriodicWord sample_near(const element_type& a, Rng& rng) const override;
};

std::shared_ptr<CantorOracle> mk_cantor();

enum class TangentDiskMode {
  standard,     // boundary neighbourhoods are open disks tangent to the axis, plus the point
  strict_paper  // boundary neighbourhoods are the plain ball of radius 1/n, plus the point
};

/// The closed upper half plane over ℚ. All comparisons are made on squared
/// distances, so membership is decided exactly.
class TangentDiskOracle final : public NeighborhoodOracle<Q2> {
 public:
  explicit TangentDiskOracle(TangentDiskMode mode = TangentDiskMode::standard, bool interior_centers_only = false);

  std::string name() const override;
  TangentDiskMode mode() const noexcept { return mode_; }

  /// Throws std::invalid_argument for points below the axis.
  bool rel(const element_type& a, const Q2& q) const override;
  element_type delta(const element_type& a, const Q2& q) const override;
  element_type unit(const Q2& y) const override { return {Natural(1), y}; }
  element_type meet(const element_type& a, const element_type& a2) const override;
  Q2 sample_point(Rng& rng) const override;
  element_type sample_element_over(const Q2& x, Rng& rng) const override;
  Q2 sample_near(const element_type& a, Rng& rng) const override;

  /// Centre of the disk part of N(n, c).
  Q2 disk_center(const Natural& n, const Q2& c) const;

 private:
  bool disk_contains(const Natural& outer_n, const Q2& outer_c, const Natural& inner_n, const Q2& inner_c) const;
  static void require_half_plane(const Q2& q);

  TangentDiskMode mode_;
  bool interior_centers_only_;
};

std::shared_ptr<TangentDiskOracle> mk_tangent_disk(TangentDiskMode mode = TangentDiskMode::standard);

/// The spatial fibrous preorder of an abelian group with a neighbourhood
/// set I of zero and a refinement map h:
/// (n,x) R y iff n(x - y) ∈ I, ∂((n,x),y) = (h(x - y), y) for x != y.
template <class G>
class NormedGroupOracle final : public NeighborhoodOracle<G> {
 public:
  using typename NeighborhoodOracle<G>::element_type;
  struct Group {
    std::function<G(const G&, const G&)> add;
    std::function<G(const G&, const G&)> sub;
    std::function<G(const Natural&, const G&)> times;  // n-fold sum
    std::function<bool(const G&)> in_I;
    std::function<Natural(const G&)> h;                // only evaluated on I
    std::function<G(Rng&)> sample_point;
    std::function<G(const G& center, const Natural& n, Rng&)> sample_near;
  };

  NormedGroupOracle(std::string name, Group g) : name_(std::move(name)), g_(std::move(g)) {}

  std::string name() const override { return name_; }
  const Group& group() const noexcept { return g_; }

  bool rel(const element_type& a, const G& y) const override { return g_.in_I(g_.times(a.index, g_.sub(a.point, y))); }
  /// Defined whenever x - y ∈ I, which includes every related pair.
  element_type delta(const element_type& a, const G& y) const override {
    if (a.point == y) return a;
    G diff = g_.sub(a.point, y);
    if (!g_.in_I(diff)) throw OutsideDomain(name_ + ": h evaluated outside I");
    return {g_.h(diff), y};
  }
  element_type unit(const G& y) const override { return {Natural(1), y}; }
  element_type meet(const element_type& a, const element_type& a2) const override {
    this->require_same_fiber(a, a2);
    return {a.index * a2.index, a.point};
  }
  G sample_point(Rng& rng) const override { return g_.sample_point(rng); }
  element_type sample_element_over(const G& x, Rng& rng) const override { return {sample_index(rng), x}; }
  G sample_near(const element_type& a, Rng& rng) const override { return g_.sample_near(a.point, a.index, rng); }

  /// Samples the three conditions on (I, h): 0 ∈ I (NG1);
  /// n n' a ∈ I => n a, n' a ∈ I (NG2); n a ∈ I and h(a) a' ∈ I => n (a + a') ∈ I (NG3).
  AxiomReport check_conditions(std::size_t n_samples, std::uint64_t seed) const {
    ViolationSink sink(false);
    Rng zero_rng = sample_engine(seed, n_samples);
    const G some = g_.sample_point(zero_rng);
    const G zero = g_.sub(some, some);
    sink.count();
    if (!g_.in_I(zero)) sink.add("NG1", encode(zero), "0 not in I");
    for (std::size_t i = 0; i < n_samples; ++i) {
      Rng rng = sample_engine(seed, i);
      const G x = g_.sample_point(rng);
      const Natural n = sample_index(rng, 6), n2 = sample_index(rng, 6);
      const G a = g_.sub(g_.sample_near(x, n * n2, rng), x);
      sink.count();
      if (g_.in_I(g_.times(n * n2, a)) && !(g_.in_I(g_.times(n, a)) && g_.in_I(g_.times(n2, a))))
        sink.add("NG2", json{{"n", encode(n)}, {"n2", encode(n2)}, {"a", encode(a)}});
      const G b = g_.sub(g_.sample_near(x, n, rng), x);
      if (!g_.in_I(g_.times(n, b))) continue;
      const Natural hb = g_.h(b);
      const G b2 = g_.sub(g_.sample_near(x, hb, rng), x);
      sink.count();
      if (g_.in_I(g_.times(hb, b2)) && !g_.in_I(g_.times(n, g_.add(b, b2))))
        sink.add("NG3", json{{"n", encode(n)}, {"a", encode(b)}, {"a2", encode(b2)}});
    }
    return sink.take();
  }

 private:
  std::string name_;
  Group g_;
};

/// h(a) for the max-norm unit ball: with k the natural number such that
/// 1/(k+1) <= |a| < 1/k, the least h with 1/h < 1/k - |a|; h(0) = 1.
Natural normed_refinement(const Rational& norm);

/// ℚ^d with the max-norm and I the open unit ball.
std::shared_ptr<NormedGroupOracle<QVec>> mk_normed_q(std::size_t dimension);

/// A natural space given by a basic-neighbourhood predicate N(n, x) and a
/// witness n' with N(n', y) ⊆ N(n, x) for y ∈ N(n, x).
template <class Point>
class NaturalSpaceOracle final : public NeighborhoodOracle<Point> {
 public:
  using typename NeighborhoodOracle<Point>::element_type;
  using Membership = std::function<bool(const Natural& n, const Point& x, const Point& y)>;
  using Witness = std::function<Natural(const Natural& n, const Point& x, const Point& y)>;
  using PointSampler = std::function<Point(Rng&)>;
  using NearSampler = std::function<Point(const Natural& n, const Point& x, Rng&)>;

  NaturalSpaceOracle(std::string name, Membership member, Witness witness, PointSampler points, NearSampler near)
      : name_(std::move(name)),
        member_(std::move(member)),
        witness_(std::move(witness)),
        points_(std::move(points)),
        near_(std::move(near)) {}

  std::string name() const override { return name_; }
  bool rel(const element_type& a, const Point& y) const override { return member_(a.index, a.point, y); }
  element_type delta(const element_type& a, const Point& y) const override {
    this->require_rel(a, y);
    return {witness_(a.index, a.point, y), y};
  }
  element_type unit(const Point& y) const override { return {Natural(1), y}; }
  element_type meet(const element_type& a, const element_type& a2) const override {
    this->require_same_fiber(a, a2);
    return {a.index * a2.index, a.point};
  }
  Point sample_point(Rng& rng) const override { return points_(rng); }
  element_type sample_element_over(const Point& x, Rng& rng) const override { return {sample_index(rng), x}; }
  Point sample_near(const element_type& a, Rng& rng) const override { return near_(a.index, a.point, rng); }

  /// Samples x ∈ N(n,x) (NS1), N(nn',x) ⊆ N(n,x) ∩ N(n',x) (NS2) and the
  /// witness inclusion N(witness(n,x,y), y) ⊆ N(n,x) (NS3).
  AxiomReport check_conditions(std::size_t n_samples, std::uint64_t seed) const {
    ViolationSink sink(false);
    for (std::size_t i = 0; i < n_samples; ++i) {
      Rng rng = sample_engine(seed, i);
      const Point x = points_(rng);
      const Natural n = sample_index(rng), n2 = sample_index(rng);
      sink.count(3);
      if (!member_(n, x, x)) sink.add("NS1", json{{"n", encode(n)}, {"x", encode(x)}});
      const Point y = near_(n * n2, x, rng);
      if (member_(n * n2, x, y) && !(member_(n, x, y) && member_(n2, x, y)))
        sink.add("NS2", json{{"n", encode(n)}, {"n2", encode(n2)}, {"x", encode(x)}, {"y", encode(y)}});
      const Point y2 = near_(n, x, rng);
      if (!member_(n, x, y2)) continue;
      const Natural k = witness_(n, x, y2);
      const Point z = near_(k, y2, rng);
      if (member_(k, y2, z) && !member_(n, x, z))
        sink.add("NS3", json{{"n", encode(n)}, {"x", encode(x)}, {"y", encode(y2)}, {"z", encode(z)}},
                 "witness index does not refine the neighbourhood");
    }
    return sink.take();
  }

 private:
  std::string name_;
  Membership member_;
  Witness witness_;
  PointSampler points_;
  NearSampler near_;
};

template <class Point>
std::shared_ptr<NaturalSpaceOracle<Point>> mk_natural_space(std::string name,
                                                            typename NaturalSpaceOracle<Point>::Membership member,
                                                            typename NaturalSpaceOracle<Point>::Witness witness,
                                                            typename NaturalSpaceOracle<Point>::PointSampler points,
                                                            typename NaturalSpaceOracle<Point>::NearSampler near) {
  return std::make_shared<NaturalSpaceOracle<Point>>(std::move(name), std::move(member), std::move(witness),
                                                     std::move(points), std::move(near));
}

/// Metric balls on ℚ as a natural space.
std::shared_ptr<NaturalSpaceOracle<Rational>> natural_metric();
/// p-adic cosets as a natural space with witness (n, x, y) -> n.
std::shared_ptr<NaturalSpaceOracle<Integer>> natural_padic(unsigned long prime);

/// A monoid-indexed family of relations R_i with refinement maps ∂_i:
/// A = I × B, (i,x) R y iff x R_i y, ∂((i,x),y) = (∂_i(x,y), y), m = (ij, x).
template <class Point, class Idx>
class IndexedFamilyOracle final : public NeighborhoodOracle<Point, Idx> {
 public:
  using typename NeighborhoodOracle<Point, Idx>::element_type;
  struct Family {
    Idx identity;
    std::function<Idx(const Idx&, const Idx&)> op;
    std::function<bool(const Idx& i, const Point& x, const Point& y)> rel;
    std::function<Idx(const Idx& i, const Point& x, const Point& b)> refine;
    std::function<Point(Rng&)> sample_point;
    std::function<Idx(Rng&)> sample_index;
    std::function<Point(const Idx& i, const Point& x, Rng&)> sample_near;
  };

  IndexedFamilyOracle(std::string name, Family fam) : name_(std::move(name)), fam_(std::move(fam)) {}

  std::string name() const override { return name_; }
  bool rel(const element_type& a, const Point& y) const override { return fam_.rel(a.index, a.point, y); }
  element_type delta(const element_type& a, const Point& y) const override {
    this->require_rel(a, y);
    return {fam_.refine(a.index, a.point, y), y};
  }
  element_type unit(const Point& y) const override { return {fam_.identity, y}; }
  element_type meet(const element_type& a, const element_type& a2) const override {
    this->require_same_fiber(a, a2);
    return {fam_.op(a.index, a2.index), a.point};
  }
  Point sample_point(Rng& rng) const override { return fam_.sample_point(rng); }
  element_type sample_element_over(const Point& x, Rng& rng) const override { return {fam_.sample_index(rng), x}; }
  Point sample_near(const element_type& a, Rng& rng) const override { return fam_.sample_near(a.index, a.point, rng); }

  /// Samples x R_i x (IF1), x R_ij y => x R_i y and x R_j y (IF2) and
  /// x R_i b and b R_{∂_i(x,b)} y => x R_i y (IF3).
  AxiomReport check_conditions(std::size_t n_samples, std::uint64_t seed) const {
    ViolationSink sink(false);
    for (std::size_t s = 0; s < n_samples; ++s) {
      Rng rng = sample_engine(seed, s);
      const Point x = fam_.sample_point(rng);
      const Idx i = fam_.sample_index(rng), j = fam_.sample_index(rng);
      sink.count(3);
      if (!fam_.rel(i, x, x)) sink.add("IF1", json{{"i", encode(i)}, {"x", encode(x)}});
      const Idx ij = fam_.op(i, j);
      const Point y = fam_.sample_near(ij, x, rng);
      if (fam_.rel(ij, x, y) && !(fam_.rel(i, x, y) && fam_.rel(j, x, y)))
        sink.add("IF2", json{{"i", encode(i)}, {"j", encode(j)}, {"x", encode(x)}, {"y", encode(y)}});
      const Point b = fam_.sample_near(i, x, rng);
      if (!fam_.rel(i, x, b)) continue;
      const Idx k = fam_.refine(i, x, b);
      const Point z = fam_.sample_near(k, b, rng);
      if (fam_.rel(k, b, z) && !fam_.rel(i, x, z))
        sink.add("IF3", json{{"i", encode(i)}, {"x", encode(x)}, {"b", encode(b)}, {"y", encode(z)}});
    }
    return sink.take();
  }

 private:
  std::string name_;
  Family fam_;
};

template <class Point, class Idx>
std::shared_ptr<IndexedFamilyOracle<Point, Idx>> mk_indexed_family(std::string name,
                                                                   typename IndexedFamilyOracle<Point, Idx>::Family f) {
  return std::make_shared<IndexedFamilyOracle<Point, Idx>>(std::move(name), std::move(f));
}

/// I = (ℕ⁺, ·, 1) with R_n the metric relation on ℚ.
std::shared_ptr<IndexedFamilyOracle<Rational, Natural>> indexed_metric();

}  // namespace fibrous::lazy
