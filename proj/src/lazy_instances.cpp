#include "fibrous/lazy_instances.hpp"

#include <algorithm>

namespace fibrous::lazy {

namespace {

long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

unsigned long to_exponent(const Natural& n) {
  if (n < 0 || n > 100000) throw std::out_of_range("p-adic index out of the supported range");
  return n.convert_to<unsigned long>();
}

EventuallyPeriodicWord::Letter random_letter(Rng& rng) { return (rng() & 1U) != 0 ? 2 : 0; }

std::vector<EventuallyPeriodicWord::Letter> random_letters(Rng& rng, std::size_t len) {
  std::vector<EventuallyPeriodicWord::Letter> out(len);
  for (auto& c : out) c = random_letter(rng);
  return out;
}

}  // namespace

Natural sample_index(Rng& rng, unsigned max) {
  if (uniform(rng, 0, 15) == 0) return Natural(uniform(rng, 1, 100));
  return Natural(uniform(rng, 1, max));
}

Rational sample_rational(Rng& rng, long long range, long long max_den) {
  long long den = uniform(rng, 1, max_den);
  return make_rational(uniform(rng, -range * den, range * den), den);
}

Rational sample_in_interval(const Rational& center, const Rational& radius, Rng& rng) {
  Rational t = make_rational(uniform(rng, 0, 1250), 1000);
  Rational offset = t * radius;
  return (rng() & 1U) != 0 ? Rational(center + offset) : Rational(center - offset);
}

Natural metric_delta_index(const Natural& n, const Rational& d) {
  Rational slack = 1 - d * n;
  if (slack <= 0) throw OutsideDomain("metric delta requires d(x,y) < 1/n");
  return next_integer_above(Rational(n) / slack);
}

std::shared_ptr<MetricOracle<Rational>> metric_q() {
  return mk_metric<Rational>(
      "metric-q", [](const Rational& x, const Rational& y) { return distance_q(x, y); },
      [](Rng& rng) { return sample_rational(rng); },
      [](const Rational& c, const Rational& r, Rng& rng) { return sample_in_interval(c, r, rng); });
}

std::shared_ptr<MetricOracle<Q2>> metric_q2() {
  return mk_metric<Q2>(
      "metric-q2",
      [](const Q2& x, const Q2& y) { return chebyshev_distance(QVec{x[0], x[1]}, QVec{y[0], y[1]}); },
      [](Rng& rng) { return Q2{sample_rational(rng), sample_rational(rng)}; },
      [](const Q2& c, const Rational& r, Rng& rng) {
        return Q2{sample_in_interval(c[0], r, rng), sample_in_interval(c[1], r, rng)};
      });
}

// p-adic ---------------------------------------------------------------------

PadicOracle::PadicOracle(unsigned long prime) : prime_(prime) {
  if (prime < 2) throw std::invalid_argument("p-adic topology needs p >= 2");
  for (unsigned long d = 2; d * d <= prime; ++d)
    if (prime % d == 0) throw std::invalid_argument("p-adic topology needs a prime, got " + std::to_string(prime));
}

Integer PadicOracle::modulus(const Natural& n) const { return power(Integer(prime_), to_exponent(n)); }

bool PadicOracle::rel(const element_type& a, const Integer& y) const { return divides(modulus(a.index), y - a.point); }

PadicOracle::element_type PadicOracle::delta(const element_type& a, const Integer& y) const {
  require_rel(a, y);
  return {a.index, y};
}

PadicOracle::element_type PadicOracle::meet(const element_type& a, const element_type& a2) const {
  require_same_fiber(a, a2);
  return {a.index + a2.index, a.point};
}

Integer PadicOracle::sample_point(Rng& rng) const { return Integer(uniform(rng, -1000000, 1000000)); }

PadicOracle::element_type PadicOracle::sample_element_over(const Integer& x, Rng& rng) const {
  return {Natural(uniform(rng, 1, 6)), x};
}

Integer PadicOracle::sample_near(const element_type& a, Rng& rng) const {
  const long long roll = uniform(rng, 0, 9);
  Natural e = a.index;
  if (roll >= 5 && roll < 7) e += 1;
  if (roll >= 7 && roll < 9 && e > 0) e -= 1;
  if (roll == 9) e = 0;
  return a.point + Integer(uniform(rng, -50, 50)) * modulus(e);
}

std::shared_ptr<PadicOracle> mk_padic(unsigned long prime) { return std::make_shared<PadicOracle>(prime); }

// Cantor ---------------------------------------------------------------------

namespace {

std::size_t clamp_index(const Natural& n, std::size_t cap) {
  if (n > cap) return cap;
  return n.convert_to<std::size_t>();
}

}  // namespace

bool CantorOracle::rel(const element_type& a, const EventuallyPeriodicWord& w) const {
  return agree_up_to(a.point, w, clamp_index(a.index, agreement_horizon(a.point, w)));
}

CantorOracle::element_type CantorOracle::delta(const element_type& a, const EventuallyPeriodicWord& w) const {
  require_rel(a, w);
  return {a.index, w};
}

CantorOracle::element_type CantorOracle::meet(const element_type& a, const element_type& a2) const {
  require_same_fiber(a, a2);
  return {a.index * a2.index, a.point};
}

EventuallyPeriodicWord CantorOracle::sample_point(Rng& rng) const {
  auto pre = random_letters(rng, static_cast<std::size_t>(uniform(rng, 0, 8)));
  auto per = random_letters(rng, static_cast<std::size_t>(uniform(rng, 1, 8)));
  return {std::move(pre), std::move(per)};
}

CantorOracle::element_type CantorOracle::sample_element_over(const EventuallyPeriodicWord& x, Rng& rng) const {
  return {sample_index(rng, 10), x};
}

EventuallyPeriodicWord CantorOracle::sample_near(const element_type& a, Rng& rng) const {
  if (uniform(rng, 0, 9) == 0) return a.point;
  const std::size_t keep = clamp_index(a.index, 40);
  std::vector<EventuallyPeriodicWord::Letter> pre;
  for (std::size_t i = 1; i <= keep; ++i) pre.push_back(a.point.at(i));
  if (uniform(rng, 0, 2) == 0) {
    // Flip one letter close to the end of the agreed prefix.
    const std::size_t pos = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(keep) + 2));
    while (pre.size() < pos) pre.push_back(random_letter(rng));
    pre[pos - 1] = pre[pos - 1] == 0 ? 2 : 0;
  }
  auto extra = random_letters(rng, static_cast<std::size_t>(uniform(rng, 0, 3)));
  pre.insert(pre.end(), extra.begin(), extra.end());
  return {std::move(pre), random_letters(rng, static_cast<std::size_t>(uniform(rng, 1, 4)))};
}

std::shared_ptr<CantorOracle> mk_cantor() { return std::make_shared<CantorOracle>(); }

// Tangent disk -------------------------------------------------------------------

TangentDiskOracle::TangentDiskOracle(TangentDiskMode mode, bool interior_centers_only)
    : mode_(mode), interior_centers_only_(interior_centers_only) {}

std::string TangentDiskOracle::name() const {
  return mode_ == TangentDiskMode::standard ? "tangent-disk" : "tangent-disk:strict-paper";
}

void TangentDiskOracle::require_half_plane(const Q2& q) {
  if (q[1] < 0) throw std::invalid_argument("tangent disk points must satisfy y >= 0");
}

Q2 TangentDiskOracle::disk_center(const Natural& n, const Q2& c) const {
  if (c[1] > 0 || mode_ == TangentDiskMode::strict_paper) return c;
  return Q2{c[0], Rational(Integer(1), n)};
}

bool TangentDiskOracle::rel(const element_type& a, const Q2& q) const {
  require_half_plane(a.point);
  require_half_plane(q);
  if (q == a.point) return true;
  Rational r = Rational(Integer(1), a.index);
  return squared_euclidean(q, disk_center(a.index, a.point)) < r * r;
}

// Open disk of N(inner_n, inner_c) inside the open disk of N(outer_n, outer_c):
// |centre - centre'| + r' <= R, decided on squares.
bool TangentDiskOracle::disk_contains(const Natural& outer_n, const Q2& outer_c, const Natural& inner_n,
                                      const Q2& inner_c) const {
  Rational slack = Rational(Integer(1), outer_n) - Rational(Integer(1), inner_n);
  if (slack < 0) return false;
  return squared_euclidean(disk_center(outer_n, outer_c), disk_center(inner_n, inner_c)) <= slack * slack;
}

TangentDiskOracle::element_type TangentDiskOracle::delta(const element_type& a, const Q2& q) const {
  require_rel(a, q);
  // The least n' with N(n', q) ⊆ N(n, c); the disks around q shrink
  // monotonically in n', so double then bisect.
  Natural hi = 1;
  while (!disk_contains(a.index, a.point, hi, q)) hi *= 2;
  Natural lo = hi / 2;  // fails, or is 0
  while (hi - lo > 1) {
    Natural mid = (lo + hi) / 2;
    if (disk_contains(a.index, a.point, mid, q))
      hi = mid;
    else
      lo = mid;
  }
  return {hi, q};
}

TangentDiskOracle::element_type TangentDiskOracle::meet(const element_type& a, const element_type& a2) const {
  require_same_fiber(a, a2);
  return {a.index * a2.index, a.point};
}

Q2 TangentDiskOracle::sample_point(Rng& rng) const {
  Rational x = sample_rational(rng, 5, 12);
  if (!interior_centers_only_ && uniform(rng, 0, 3) == 0) return Q2{x, Rational(0)};
  long long den = uniform(rng, 1, 12);
  return Q2{x, make_rational(uniform(rng, 1, 5 * den), den)};
}

TangentDiskOracle::element_type TangentDiskOracle::sample_element_over(const Q2& x, Rng& rng) const {
  return {sample_index(rng, 8), x};
}

Q2 TangentDiskOracle::sample_near(const element_type& a, Rng& rng) const {
  if (uniform(rng, 0, 9) == 0) return a.point;
  const Q2 center = disk_center(a.index, a.point);
  const Rational r(Integer(1), a.index);
  Q2 q{sample_in_interval(center[0], r, rng), sample_in_interval(center[1], r, rng)};
  if (uniform(rng, 0, 4) == 0) q[1] = 0;
  if (q[1] < 0) q[1] = -q[1];
  return q;
}

std::shared_ptr<TangentDiskOracle> mk_tangent_disk(TangentDiskMode mode) {
  return std::make_shared<TangentDiskOracle>(mode, mode == TangentDiskMode::strict_paper);
}

// Normed group -------------------------------------------------------------------

Natural normed_refinement(const Rational& norm) {
  if (norm == 0) return 1;
  if (norm < 0 || norm >= 1) throw OutsideDomain("h is defined on the open unit ball only");
  const Rational inv = 1 / norm;
  const Integer k = -floor(-inv) - 1;  // k < 1/|a| <= k + 1, and k >= 1 since |a| < 1
  return next_integer_above(1 / (Rational(Integer(1), k) - norm));
}

std::shared_ptr<NormedGroupOracle<QVec>> mk_normed_q(std::size_t dimension) {
  if (dimension == 0) throw std::invalid_argument("normed-q needs dimension >= 1");
  NormedGroupOracle<QVec>::Group g;
  g.add = [](const QVec& a, const QVec& b) {
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
  };
  g.sub = [](const QVec& a, const QVec& b) {
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
  };
  g.times = [](const Natural& n, const QVec& a) {
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * n;
    return out;
  };
  g.in_I = [](const QVec& a) { return max_norm(a) < 1; };
  g.h = [](const QVec& a) { return normed_refinement(max_norm(a)); };
  g.sample_point = [dimension](Rng& rng) {
    QVec out(dimension);
    for (auto& c : out) c = sample_rational(rng);
    return out;
  };
  g.sample_near = [](const QVec& center, const Natural& n, Rng& rng) {
    const Rational r(Integer(1), n);
    QVec out(center.size());
    for (std::size_t i = 0; i < center.size(); ++i) out[i] = sample_in_interval(center[i], r, rng);
    return out;
  };
  return std::make_shared<NormedGroupOracle<QVec>>("normed-q:" + std::to_string(dimension), std::move(g));
}

// Natural spaces and indexed families ------------------------------------------------

std::shared_ptr<NaturalSpaceOracle<Rational>> natural_metric() {
  return mk_natural_space<Rational>(
      "natural-metric",
      [](const Natural& n, const Rational& x, const Rational& y) { return distance_q(x, y) * n < 1; },
      [](const Natural& n, const Rational& x, const Rational& y) { return metric_delta_index(n, distance_q(x, y)); },
      [](Rng& rng) { return sample_rational(rng); },
      [](const Natural& n, const Rational& x, Rng& rng) { return sample_in_interval(x, Rational(Integer(1), n), rng); });
}

std::shared_ptr<NaturalSpaceOracle<Integer>> natural_padic(unsigned long prime) {
  auto cosets = mk_padic(prime);
  return mk_natural_space<Integer>(
      "natural-padic:" + std::to_string(prime),
      [cosets](const Natural& n, const Integer& x, const Integer& y) { return cosets->rel({n, x}, y); },
      [](const Natural& n, const Integer&, const Integer&) { return n; },
      [cosets](Rng& rng) { return cosets->sample_point(rng); },
      [cosets](const Natural& n, const Integer& x, Rng& rng) { return cosets->sample_near({n, x}, rng); });
}

std::shared_ptr<IndexedFamilyOracle<Rational, Natural>> indexed_metric() {
  IndexedFamilyOracle<Rational, Natural>::Family fam;
  fam.identity = 1;
  fam.op = [](const Natural& i, const Natural& j) { return Natural(i * j); };
  fam.rel = [](const Natural& i, const Rational& x, const Rational& y) { return distance_q(x, y) * i < 1; };
  fam.refine = [](const Natural& i, const Rational& x, const Rational& b) {
    return metric_delta_index(i, distance_q(x, b));
  };
  fam.sample_point = [](Rng& rng) { return sample_rational(rng); };
  fam.sample_index = [](Rng& rng) { return sample_index(rng); };
  fam.sample_near = [](const Natural& i, const Rational& x, Rng& rng) {
    return sample_in_interval(x, Rational(Integer(1), i), rng);
  };
  return mk_indexed_family<Rational, Natural>("indexed-metric", std::move(fam));
}

}  // namespace fibrous::lazy
