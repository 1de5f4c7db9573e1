#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fibrous::lazy {

/// A point of the Cantor space {0,2}^ℕ that is eventually periodic:
/// preperiod followed by the period repeated forever. Positions are 1-based.
///
/// Always canonical: the period is primitive and the preperiod is as short as
/// possible, so two words are equal as sequences iff they compare equal.
class EventuallyPeriodicWord {
 public:
  using Letter = std::uint8_t;

  /// Throws std::invalid_argument on an empty period or a letter outside {0,2}.
  EventuallyPeriodicWord(std::vector<Letter> preperiod, std::vector<Letter> period);

  /// Parses "pre(period)", e.g. "02(2)" or "(02)".
  static EventuallyPeriodicWord parse(const std::string& text);

  Letter at(std::size_t position) const;  // position >= 1

  const std::vector<Letter>& preperiod() const noexcept { return preperiod_; }
  const std::vector<Letter>& period() const noexcept { return period_; }

  std::string to_string() const;

  friend bool operator==(const EventuallyPeriodicWord&, const EventuallyPeriodicWord&) = default;

 private:
  std::vector<Letter> preperiod_;
  std::vector<Letter> period_;
};

/// Length of a prefix after which agreement of u and w on that prefix implies
/// agreement everywhere.
std::size_t agreement_horizon(const EventuallyPeriodicWord& u, const EventuallyPeriodicWord& w);

/// u(i) = w(i) for 1 <= i <= n; n is clamped to the agreement horizon.
bool agree_up_to(const EventuallyPeriodicWord& u, const EventuallyPeriodicWord& w, std::size_t n);

/// Smallest position where u and w differ, or 0 when equal.
std::size_t first_difference(const EventuallyPeriodicWord& u, const EventuallyPeriodicWord& w);

}  // namespace fibrous::lazy
