#include "fibrous/lazy_spaces.hpp"

namespace fibrous::lazy {

json encode(const Integer& v) { return to_string(v); }
json encode(const Rational& v) { return to_string(v); }

json encode(const Q2& v) { return json::array({to_string(v[0]), to_string(v[1])}); }

json encode(const QVec& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

json encode(const EventuallyPeriodicWord& v) { return v.to_string(); }

Rng sample_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

json replay_document(const Violation& v) {
  return json{{"seed", v.witness.value("seed", json(nullptr))}, {"witness", v.witness}};
}

}  // namespace fibrous::lazy
