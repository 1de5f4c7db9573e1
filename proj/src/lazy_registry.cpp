#include "fibrous/lazy_registry.hpp"

#include <memory>
#include <stdexcept>

#include "fibrous/lazy_instances.hpp"

namespace fibrous::lazy {

namespace {

template <class Oracle>
InstanceHandle bind(std::shared_ptr<Oracle> o) {
  InstanceHandle h;
  h.name = o->name();
  h.check = [o](std::size_t n, std::uint64_t seed, bool verbose) { return sample_check(*o, n, seed, verbose); };
  h.replay = [o](std::uint64_t seed, std::uint64_t sample) { return replay_sample(*o, seed, sample); };
  return h;
}

unsigned long parse_unsigned(const std::string& text, const std::string& id) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad numeric parameter in instance '" + id + "'");
  }
}

// Splits "head:arg" into head and arg; arg is empty without a colon.
std::pair<std::string, std::string> split(const std::string& id) {
  auto colon = id.find(':');
  if (colon == std::string::npos) return {id, {}};
  return {id.substr(0, colon), id.substr(colon + 1)};
}

}  // namespace

InstanceHandle make_instance(const std::string& id) {
  auto [head, arg] = split(id);
  if (id == "metric-q") return bind(metric_q());
  if (id == "metric-q2") return bind(metric_q2());
  if (id == "cantor") return bind(mk_cantor());
  if (id == "indexed-metric") return bind(indexed_metric());
  if (id == "natural-metric") return bind(natural_metric());
  if (id == "tangent-disk") return bind(mk_tangent_disk(TangentDiskMode::standard));
  if (id == "tangent-disk:strict-paper") return bind(mk_tangent_disk(TangentDiskMode::strict_paper));
  if (head == "padic" && !arg.empty()) return bind(mk_padic(parse_unsigned(arg, id)));
  if (head == "natural-padic" && !arg.empty()) return bind(natural_padic(parse_unsigned(arg, id)));
  if (head == "normed-q" && !arg.empty()) return bind(mk_normed_q(parse_unsigned(arg, id)));
  if (id == "mutant-metric-q") {
    std::shared_ptr<const NeighborhoodOracle<Rational>> inner = metric_q();
    return bind(std::make_shared<ShiftedDelta<Rational, Natural>>(inner, Natural(-1)));
  }
  if (head == "mutant-padic" && !arg.empty()) {
    std::shared_ptr<const NeighborhoodOracle<Integer>> inner = mk_padic(parse_unsigned(arg, id));
    return bind(std::make_shared<ShiftedDelta<Integer, Natural>>(inner, Natural(-1)));
  }
  throw std::invalid_argument("unknown instance '" + id + "'");
}

std::vector<std::string> standard_instances() {
  return {"metric-q",     "metric-q2",  "padic:2",    "padic:3",        "padic:5",       "cantor",
          "tangent-disk", "tangent-disk:strict-paper", "normed-q:1", "normed-q:2", "indexed-metric",
          "natural-metric"};
}

ModulusCase make_modulus_case(const std::string& id) {
  auto [head, arg] = split(id);
  auto wrap = [](auto morphism) {
    ModulusCase c;
    c.name = morphism.name();
    c.verify = [morphism](std::size_t n, std::uint64_t seed, bool verbose) {
      return morphism.verify(n, seed, verbose);
    };
    return c;
  };
  if ((head == "padic-translate" || head == "padic-scale") && !arg.empty()) {
    const unsigned long p = parse_unsigned(arg, id);
    std::shared_ptr<const NeighborhoodOracle<Integer>> space = mk_padic(p);
    std::function<Integer(const Integer&)> f;
    if (head == "padic-translate")
      f = [](const Integer& x) { return Integer(x + 1); };
    else
      f = [p](const Integer& x) { return Integer(x * p); };
    return wrap(morphism_from_modulus<Integer, Integer, Natural>(
        space, space, f, [](const Natural& n, const Integer&) { return n; }, id));
  }
  if (id == "q-lipschitz2" || id == "q-lipschitz2-wrong") {
    std::shared_ptr<const NeighborhoodOracle<Rational>> line = metric_q();
    std::function<Natural(const Natural&, const Rational&)> omega;
    if (id == "q-lipschitz2")
      omega = [](const Natural& n, const Rational&) { return Natural(2 * n); };
    else
      omega = [](const Natural& n, const Rational&) { return n; };
    return wrap(morphism_from_modulus<Rational, Rational, Natural>(
        line, line, [](const Rational& x) { return Rational(2 * x); }, omega, id));
  }
  throw std::invalid_argument("unknown modulus case '" + id + "'");
}

std::vector<std::string> modulus_cases() {
  return {"padic-translate:3", "padic-scale:3", "q-lipschitz2", "q-lipschitz2-wrong"};
}

}  // namespace fibrous::lazy
