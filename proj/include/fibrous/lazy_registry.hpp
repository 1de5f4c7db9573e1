#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fibrous/report.hpp"

namespace fibrous::lazy {

/// A named lazy instance with its sampled checker bound in.
struct InstanceHandle {
  std::string name;
  std::function<AxiomReport(std::size_t samples, std::uint64_t seed, bool verbose)> check;
  std::function<AxiomReport(std::uint64_t seed, std::uint64_t sample)> replay;
};

/// Accepts "metric-q", "metric-q2", "padic:<p>", "cantor",
/// "tangent-disk[:strict-paper]", "normed-q:<d>", "indexed-metric",
/// "natural-metric", "natural-padic:<p>", and the deliberately broken
/// "mutant-metric-q" and "mutant-padic:<p>" (delta index one too small).
/// Throws std::invalid_argument for anything else.
InstanceHandle make_instance(const std::string& id);

/// The instances every release is expected to pass.
std::vector<std::string> standard_instances();

struct ModulusCase {
  std::string name;
  std::function<AxiomReport(std::size_t samples, std::uint64_t seed, bool verbose)> verify;
};

/// "padic-translate:<p>" (x+1, ω(n,y) = n), "padic-scale:<p>" (p·x, ω = n),
/// "q-lipschitz2" (2x on ℚ, ω = 2n) and "q-lipschitz2-wrong" (2x, ω = n).
ModulusCase make_modulus_case(const std::string& id);

std::vector<std::string> modulus_cases();

}  // namespace fibrous::lazy
