#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fibrous {

using json = nlohmann::json;

/// Malformed input: an index out of range, a partial table whose domain is not
/// the one the structure prescribes, a mismatched shape. Distinct from an
/// axiom violation, which is reported through AxiomReport.
class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Violation {
  std::string tag;   // e.g. "F3", "MOR2", "T-union"
  json witness;      // tuple of indices for finite checks, serialized values for lazy ones
  std::string detail;
};

struct AxiomReport {
  std::vector<Violation> violations;
  std::size_t checked = 0;  // number of instances of the conditions that were evaluated
  std::string note;

  bool passed() const noexcept { return violations.empty(); }

  bool has(const std::string& tag) const {
    for (const auto& v : violations)
      if (v.tag == tag) return true;
    return false;
  }

  const Violation* first(const std::string& tag) const {
    for (const auto& v : violations)
      if (v.tag == tag) return &v;
    return nullptr;
  }

  void merge(AxiomReport other) {
    for (auto& v : other.violations) violations.push_back(std::move(v));
    checked += other.checked;
  }
};

/// Collects violations, keeping at most one per tag unless verbose.
class ViolationSink {
 public:
  explicit ViolationSink(bool verbose) : verbose_(verbose) {}

  void add(std::string tag, json witness, std::string detail = {}) {
    if (!verbose_ && report_.has(tag)) return;
    report_.violations.push_back({std::move(tag), std::move(witness), std::move(detail)});
  }

  void count(std::size_t n = 1) { report_.checked += n; }

  AxiomReport take() { return std::move(report_); }

 private:
  bool verbose_;
  AxiomReport report_;
};

inline void to_json(json& j, const Violation& v) {
  j = json{{"tag", v.tag}, {"witness", v.witness}};
  if (!v.detail.empty()) j["detail"] = v.detail;
}

inline void to_json(json& j, const AxiomReport& r) {
  j = json{{"passed", r.passed()}, {"checked", r.checked}, {"violations", r.violations}};
  if (!r.note.empty()) j["note"] = r.note;
}

}  // namespace fibrous
