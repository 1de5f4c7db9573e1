#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "fibrous/rational.hpp"
#include "fibrous/report.hpp"
#include "fibrous/words.hpp"

namespace fibrous::lazy {

using Rng = std::mt19937_64;

/// ∂ or m queried outside the set it is defined on.
class OutsideDomain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An element of A = I × B: a neighbourhood index over a base point.
template <class Point, class Idx = Natural>
struct Element {
  Idx index;
  Point point;

  friend bool operator==(const Element&, const Element&) = default;
};

/// Lazy presentation of a spatial fibrous preorder on an infinite carrier.
///
/// Implementations promise F1-F6 contractually:
///   proj(delta(a,y)) = y,  rel(a, proj(a)),  rel(delta(a,y), z) => rel(a, z),
///   proj(unit(y)) = y,  proj(meet(a,a')) = proj(a),
///   rel(meet(a,a'), z) => rel(a, z) and rel(a', z).
/// sample_check tests those promises on seeded samples.
template <class Point, class Idx = Natural>
class NeighborhoodOracle {
 public:
  using point_type = Point;
  using index_type = Idx;
  using element_type = Element<Point, Idx>;

  virtual ~NeighborhoodOracle() = default;

  virtual std::string name() const = 0;

  virtual bool same_point(const Point& x, const Point& y) const { return x == y; }
  virtual Point proj(const element_type& a) const { return a.point; }
  virtual bool rel(const element_type& a, const Point& y) const = 0;
  /// Throws OutsideDomain unless rel(a, y).
  virtual element_type delta(const element_type& a, const Point& y) const = 0;
  virtual element_type unit(const Point& y) const = 0;
  /// Throws OutsideDomain unless a and a' lie over the same point.
  virtual element_type meet(const element_type& a, const element_type& a2) const = 0;

  virtual Point sample_point(Rng& rng) const = 0;
  virtual element_type sample_element_over(const Point& x, Rng& rng) const = 0;
  /// A point inside or just outside N(a); used to exercise the implications.
  virtual Point sample_near(const element_type& a, Rng& rng) const = 0;

  element_type sample_element(Rng& rng) const { return sample_element_over(sample_point(rng), rng); }

 protected:
  void require_rel(const element_type& a, const Point& y) const {
    if (!rel(a, y)) throw OutsideDomain(name() + ": delta queried off the relation");
  }
  void require_same_fiber(const element_type& a, const element_type& a2) const {
    if (!same_point(proj(a), proj(a2))) throw OutsideDomain(name() + ": meet of elements in different fibres");
  }
};

// JSON encodings used for witnesses. Big numbers travel as strings.
json encode(const Integer& v);
json encode(const Rational& v);
json encode(const Q2& v);
json encode(const QVec& v);
json encode(const EventuallyPeriodicWord& v);

template <class Point, class Idx>
json encode(const Element<Point, Idx>& e) {
  return json{{"n", encode(e.index)}, {"x", encode(e.point)}};
}

/// Deterministic engine for sample `index` of a run seeded with `seed`.
Rng sample_engine(std::uint64_t seed, std::uint64_t index);

namespace detail {

template <class Point, class Idx>
void check_one_sample(const NeighborhoodOracle<Point, Idx>& o, std::uint64_t seed, std::uint64_t index,
                      ViolationSink& sink) {
  Rng rng = sample_engine(seed, index);
  auto witness = [&](const char* tag, json body) {
    body["instance"] = o.name();
    body["seed"] = seed;
    body["sample"] = index;
    body["axiom"] = tag;
    return body;
  };
  try {
    const auto a = o.sample_element(rng);
    const Point x = o.proj(a);

    sink.count();
    if (!o.rel(a, x)) sink.add("F2", witness("F2", {{"a", encode(a)}}), "a not related to p(a)");

    const Point y = o.sample_near(a, rng);
    if (o.rel(a, y)) {
      const auto b = o.delta(a, y);
      sink.count();
      if (!o.same_point(o.proj(b), y))
        sink.add("F1", witness("F1", {{"a", encode(a)}, {"y", encode(y)}, {"delta", encode(b)}}), "p(d(a,y)) != y");
      const Point z = o.sample_near(b, rng);
      if (o.rel(b, z)) {
        sink.count();
        if (!o.rel(a, z))
          sink.add("F3",
                   witness("F3", {{"a", encode(a)}, {"y", encode(y)}, {"delta", encode(b)}, {"z", encode(z)}}),
                   "d(a,y) R z but not a R z");
      }
    }

    const Point q = o.sample_point(rng);
    sink.count();
    if (!o.same_point(o.proj(o.unit(q)), q)) sink.add("F4", witness("F4", {{"y", encode(q)}}), "p(s(y)) != y");

    const auto a2 = o.sample_element_over(x, rng);
    const auto mm = o.meet(a, a2);
    sink.count();
    if (!o.same_point(o.proj(mm), x))
      sink.add("F5", witness("F5", {{"a", encode(a)}, {"a2", encode(a2)}, {"meet", encode(mm)}}),
               "p(m(a,a')) != p(a)");
    const Point z2 = o.sample_near(mm, rng);
    if (o.rel(mm, z2)) {
      sink.count();
      if (!o.rel(a, z2) || !o.rel(a2, z2))
        sink.add("F6",
                 witness("F6", {{"a", encode(a)}, {"a2", encode(a2)}, {"meet", encode(mm)}, {"z", encode(z2)}}),
                 "m(a,a') R z but not both a R z and a' R z");
    }
  } catch (const std::exception& e) {
    sink.add("ERROR", witness("ERROR", json::object()), e.what());
  }
}

}  // namespace detail

/// Draws `n_samples` independent samples and tests F1-F6 on each. Every
/// violation carries the instance name, seed and sample number, which is
/// enough to replay it with replay_sample.
template <class Point, class Idx>
AxiomReport sample_check(const NeighborhoodOracle<Point, Idx>& o, std::size_t n_samples, std::uint64_t seed,
                         bool verbose = false) {
  ViolationSink sink(verbose);
  for (std::size_t i = 0; i < n_samples; ++i) detail::check_one_sample(o, seed, i, sink);
  AxiomReport report = sink.take();
  report.note = report.passed() ? "no violations in " + std::to_string(n_samples) + " samples"
                                : std::to_string(report.violations.size()) + " violation(s) in " +
                                      std::to_string(n_samples) + " samples";
  return report;
}

/// Re-runs a single sample of a sample_check run.
template <class Point, class Idx>
AxiomReport replay_sample(const NeighborhoodOracle<Point, Idx>& o, std::uint64_t seed, std::uint64_t index) {
  ViolationSink sink(true);
  detail::check_one_sample(o, seed, index, sink);
  return sink.take();
}

/// {"seed": ..., "witness": {...}} for a violation produced by sample_check
/// or by a modulus check.
json replay_document(const Violation& v);

/// Wraps an oracle and shifts the index returned by delta. Used to build
/// deliberately broken instances for mutation tests.
template <class Point, class Idx>
class ShiftedDelta final : public NeighborhoodOracle<Point, Idx> {
 public:
  using Base = NeighborhoodOracle<Point, Idx>;
  using typename Base::element_type;

  ShiftedDelta(std::shared_ptr<const Base> inner, Idx shift) : inner_(std::move(inner)), shift_(std::move(shift)) {}

  std::string name() const override { return "mutant-" + inner_->name(); }
  bool same_point(const Point& x, const Point& y) const override { return inner_->same_point(x, y); }
  Point proj(const element_type& a) const override { return inner_->proj(a); }
  bool rel(const element_type& a, const Point& y) const override { return inner_->rel(a, y); }
  element_type delta(const element_type& a, const Point& y) const override {
    auto e = inner_->delta(a, y);
    e.index += shift_;
    return e;
  }
  element_type unit(const Point& y) const override { return inner_->unit(y); }
  element_type meet(const element_type& a, const element_type& a2) const override { return inner_->meet(a, a2); }
  Point sample_point(Rng& rng) const override { return inner_->sample_point(rng); }
  element_type sample_element_over(const Point& x, Rng& rng) const override {
    return inner_->sample_element_over(x, rng);
  }
  Point sample_near(const element_type& a, Rng& rng) const override { return inner_->sample_near(a, rng); }

 private:
  std::shared_ptr<const Base> inner_;
  Idx shift_;
};

/// The fibrous morphism induced by a point map f with a continuity modulus:
/// f*((n, f(y)), y) = (omega(n, y), y).
template <class SrcPoint, class DstPoint, class Idx = Natural>
class ModulusMorphism {
 public:
  using Source = NeighborhoodOracle<SrcPoint, Idx>;
  using Target = NeighborhoodOracle<DstPoint, Idx>;
  using PointMap = std::function<DstPoint(const SrcPoint&)>;
  using Modulus = std::function<Idx(const Idx&, const SrcPoint&)>;

  ModulusMorphism(std::shared_ptr<const Source> source, std::shared_ptr<const Target> target, PointMap f,
                  Modulus omega, std::string name = "modulus")
      : source_(std::move(source)),
        target_(std::move(target)),
        f_(std::move(f)),
        omega_(std::move(omega)),
        name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }
  DstPoint map(const SrcPoint& y) const { return f_(y); }

  /// Throws OutsideDomain unless a' lies over f(y).
  Element<SrcPoint, Idx> lift(const Element<DstPoint, Idx>& a_target, const SrcPoint& y) const {
    if (!target_->same_point(target_->proj(a_target), f_(y)))
      throw OutsideDomain(name_ + ": lift queried off the fibre product");
    return {omega_(a_target.index, y), y};
  }

  /// Samples condition (1) p f*(a',y) = y (MOR1) and
  /// condition (2) f*(a',y) R z  =>  a' R' f(z) (MOR2).
  AxiomReport verify(std::size_t n_samples, std::uint64_t seed, bool verbose = false) const {
    ViolationSink sink(verbose);
    for (std::size_t i = 0; i < n_samples; ++i) {
      Rng rng = sample_engine(seed, i);
      auto witness = [&](const char* tag, json body) {
        body["morphism"] = name_;
        body["seed"] = seed;
        body["sample"] = i;
        body["axiom"] = tag;
        return body;
      };
      const SrcPoint y = source_->sample_point(rng);
      const auto at = target_->sample_element_over(f_(y), rng);
      const auto b = lift(at, y);
      sink.count();
      if (!source_->same_point(source_->proj(b), y))
        sink.add("MOR1", witness("MOR1", {{"a_target", encode(at)}, {"y", encode(y)}}), "p f*(a',y) != y");
      const SrcPoint z = source_->sample_near(b, rng);
      if (source_->rel(b, z)) {
        sink.count();
        if (!target_->rel(at, f_(z)))
          sink.add("MOR2",
                   witness("MOR2", {{"a_target", encode(at)}, {"y", encode(y)}, {"lift", encode(b)}, {"z", encode(z)}}),
                   "f*(a',y) R z but not a' R' f(z)");
      }
    }
    AxiomReport report = sink.take();
    report.note = report.passed() ? "no counterexample in " + std::to_string(n_samples) + " samples"
                                  : "modulus falsified";
    return report;
  }

 private:
  std::shared_ptr<const Source> source_;
  std::shared_ptr<const Target> target_;
  PointMap f_;
  Modulus omega_;
  std::string name_;
};

template <class SrcPoint, class DstPoint, class Idx>
ModulusMorphism<SrcPoint, DstPoint, Idx> morphism_from_modulus(
    std::shared_ptr<const NeighborhoodOracle<SrcPoint, Idx>> source,
    std::shared_ptr<const NeighborhoodOracle<DstPoint, Idx>> target, std::function<DstPoint(const SrcPoint&)> f,
    std::function<Idx(const Idx&, const SrcPoint&)> omega, std::string name = "modulus") {
  return {std::move(source), std::move(target), std::move(f), std::move(omega), std::move(name)};
}

}  // namespace fibrous::lazy
