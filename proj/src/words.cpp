#include "fibrous/words.hpp"

#include <numeric>
#include <stdexcept>

namespace fibrous::lazy {

namespace {

std::vector<EventuallyPeriodicWord::Letter> primitive_root(std::vector<EventuallyPeriodicWord::Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len != 0) continue;
    bool repeats = true;
    for (std::size_t i = len; i < n && repeats; ++i) repeats = w[i] == w[i - len];
    if (repeats) return {w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len)};
  }
  return w;
}

}  // namespace

EventuallyPeriodicWord::EventuallyPeriodicWord(std::vector<Letter> preperiod, std::vector<Letter> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("period must be nonempty");
  for (auto c : preperiod_)
    if (c != 0 && c != 2) throw std::invalid_argument("Cantor letters are 0 and 2");
  for (auto c : period_)
    if (c != 0 && c != 2) throw std::invalid_argument("Cantor letters are 0 and 2");
  period_ = primitive_root(std::move(period_));
  // Absorb the tail of the preperiod into the period by rotation.
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    preperiod_.pop_back();
    period_.insert(period_.begin(), period_.back());
    period_.pop_back();
  }
}

EventuallyPeriodicWord EventuallyPeriodicWord::parse(const std::string& text) {
  auto open = text.find('(');
  auto close = text.find(')');
  if (open == std::string::npos || close != text.size() - 1 || close < open)
    throw std::invalid_argument("expected a word of the form pre(period): '" + text + "'");
  auto letters = [](const std::string& s) {
    std::vector<Letter> out;
    for (char c : s) {
      if (c != '0' && c != '2') throw std::invalid_argument("Cantor letters are 0 and 2");
      out.push_back(static_cast<Letter>(c - '0'));
    }
    return out;
  };
  return EventuallyPeriodicWord(letters(text.substr(0, open)), letters(text.substr(open + 1, close - open - 1)));
}

EventuallyPeriodicWord::Letter EventuallyPeriodicWord::at(std::size_t position) const {
  if (position == 0) throw std::out_of_range("word positions start at 1");
  std::size_t i = position - 1;
  if (i < preperiod_.size()) return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

std::string EventuallyPeriodicWord::to_string() const {
  std::string s;
  for (auto c : preperiod_) s += static_cast<char>('0' + c);
  s += '(';
  for (auto c : period_) s += static_cast<char>('0' + c);
  return s + ')';
}

std::size_t agreement_horizon(const EventuallyPeriodicWord& u, const EventuallyPeriodicWord& w) {
  return std::max(u.preperiod().size(), w.preperiod().size()) + std::lcm(u.period().size(), w.period().size());
}

bool agree_up_to(const EventuallyPeriodicWord& u, const EventuallyPeriodicWord& w, std::size_t n) {
  std::size_t limit = std::min(n, agreement_horizon(u, w));
  for (std::size_t i = 1; i <= limit; ++i)
    if (u.at(i) != w.at(i)) return false;
  return true;
}

std::size_t first_difference(const EventuallyPeriodicWord& u, const EventuallyPeriodicWord& w) {
  std::size_t limit = agreement_horizon(u, w);
  for (std::size_t i = 1; i <= limit; ++i)
    if (u.at(i) != w.at(i)) return i;
  return 0;
}

}  // namespace fibrous::lazy
