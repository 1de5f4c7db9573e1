#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace fibrous {

/// Subset of a finite point set {0, ..., universe-1}.
///
/// Stored as 64-bit words with the first word held inline, so every set over
/// at most 64 points lives without a heap allocation. Larger universes spill
/// into further words transparently.
class PointSet {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  PointSet() = default;
  explicit PointSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}
  PointSet(std::size_t universe, std::initializer_list<std::size_t> points) : PointSet(universe) {
    for (auto x : points) insert(x);
  }

  static PointSet full(std::size_t universe) {
    PointSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~word_type{0};
    s.trim();
    return s;
  }

  /// Builds the set whose membership bits are the low bits of `bits`.
  static PointSet from_bits(std::size_t universe, word_type bits) {
    PointSet s(universe);
    if (!s.words_.empty()) s.words_[0] = bits;
    s.trim();
    return s;
  }

  template <class Range>
  static PointSet from_points(std::size_t universe, const Range& points) {
    PointSet s(universe);
    for (auto x : points) s.insert(static_cast<std::size_t>(x));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t x) const noexcept {
    return x < universe_ && ((words_[x / kWordBits] >> (x % kWordBits)) & 1U) != 0;
  }

  void insert(std::size_t x) {
    check(x);
    words_[x / kWordBits] |= word_type{1} << (x % kWordBits);
  }

  void erase(std::size_t x) {
    check(x);
    words_[x / kWordBits] &= ~(word_type{1} << (x % kWordBits));
  }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool is_subset_of(const PointSet& other) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if ((words_[w] & ~other.word(w)) != 0) return false;
    return true;
  }

  PointSet& operator|=(const PointSet& o) {
    same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  PointSet& operator&=(const PointSet& o) {
    same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  PointSet& operator-=(const PointSet& o) {
    same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  PointSet complement() const { return full(universe_) - *this; }

  /// Smallest member, or universe() when empty.
  std::size_t first() const noexcept { return next(0); }

  /// Smallest member >= from, or universe() when there is none.
  std::size_t next(std::size_t from) const noexcept {
    for (std::size_t w = from / kWordBits; w < words_.size(); ++w) {
      word_type bits = words_[w];
      if (w == from / kWordBits) bits &= ~word_type{0} << (from % kWordBits);
      if (bits != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    }
    return universe_;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t x = first(); x < universe_; x = next(x + 1)) fn(x);
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t x) { out.push_back(x); });
    return out;
  }

  /// Low word; the full value when universe() <= 64.
  word_type bits() const noexcept { return words_.empty() ? 0 : words_[0]; }

  std::size_t word_count() const noexcept { return words_.size(); }
  word_type word(std::size_t w) const noexcept { return w < words_.size() ? words_[w] : 0; }

  std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for_each([&](std::size_t x) {
      if (!first_item) s += ",";
      s += std::to_string(x);
      first_item = false;
    });
    return s + "}";
  }

  friend bool operator==(const PointSet& a, const PointSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Orders sets by their value as binary integers (bit x has weight 2^x).
  friend bool operator<(const PointSet& a, const PointSet& b) noexcept {
    if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
    for (std::size_t w = a.words_.size(); w-- > 0;)
      if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
    return false;
  }

  std::size_t hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(universe_);
    for (auto w : words_) h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  static std::size_t word_count(std::size_t universe) { return (universe + kWordBits - 1) / kWordBits; }

  void check(std::size_t x) const {
    if (x >= universe_)
      throw std::out_of_range("point " + std::to_string(x) + " outside universe of size " +
                              std::to_string(universe_));
  }

  void same_universe(const PointSet& o) const {
    if (o.universe_ != universe_) throw std::invalid_argument("PointSet universe mismatch");
  }

  void trim() {
    if (universe_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (word_type{1} << (universe_ % kWordBits)) - 1;
  }

  std::size_t universe_ = 0;
  boost::container::small_vector<word_type, 1> words_;
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const noexcept { return s.hash(); }
};

}  // namespace fibrous
