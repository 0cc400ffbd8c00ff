#pragma once

/**
 * Fixed-universe vertex subsets stored as 64-bit words.
 *
 * The universe size is part of the value: two sets over different universes
 * never compare equal and cannot be combined.
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace totdom {

using Vertex = std::size_t;
using Mask = std::uint64_t;

inline constexpr std::size_t word_bits = 64;

class VertexSet {
public:
  VertexSet() = default;

  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + word_bits - 1) / word_bits, 0) {}

  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (auto v : members)
      insert(v);
  }

  /// Single-word set; requires universe <= 64.
  static VertexSet from_mask(std::size_t universe, Mask mask) {
    if (universe > word_bits)
      throw std::length_error("VertexSet::from_mask: universe exceeds one word");
    VertexSet s(universe);
    if (universe > 0)
      s.words_[0] = mask & low_bits(universe);
    else if (mask != 0)
      throw std::out_of_range("VertexSet::from_mask: bits outside empty universe");
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w)
      s.words_[w] = ~Mask{0};
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  /// Single-word view; requires universe <= 64.
  Mask to_mask() const {
    if (universe_ > word_bits)
      throw std::length_error("VertexSet::to_mask: universe exceeds one word");
    return words_.empty() ? 0 : words_[0];
  }

  bool contains(Vertex v) const {
    check(v);
    return (words_[v / word_bits] >> (v % word_bits)) & 1U;
  }

  void insert(Vertex v) {
    check(v);
    words_[v / word_bits] |= Mask{1} << (v % word_bits);
  }

  void erase(Vertex v) {
    check(v);
    words_[v / word_bits] &= ~(Mask{1} << (v % word_bits));
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Mask w) { return w == 0; });
  }

  bool is_subset_of(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w])
        return false;
    return true;
  }

  bool intersects(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & other.words_[w])
        return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& other) {
    same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
      words_[w] |= other.words_[w];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& other) {
    same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
      words_[w] &= other.words_[w];
    return *this;
  }

  /// Set difference.
  VertexSet& operator-=(const VertexSet& other) {
    same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
      words_[w] &= ~other.words_[w];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Calls fn(v) for each member in ascending order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Mask bits = words_[w];
      while (bits) {
        fn(static_cast<Vertex>(w * word_bits + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

private:
  static Mask low_bits(std::size_t n) {
    return n >= word_bits ? ~Mask{0} : (Mask{1} << n) - 1;
  }

  void trim() {
    if (universe_ % word_bits != 0 && !words_.empty())
      words_.back() &= low_bits(universe_ % word_bits);
  }

  void check(Vertex v) const {
    if (v >= universe_)
      throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of " +
                              std::to_string(universe_));
  }

  void same_universe(const VertexSet& other) const {
    if (other.universe_ != universe_)
      throw std::invalid_argument("VertexSet: mismatched universes");
  }

  std::size_t universe_ = 0;
  std::vector<Mask> words_;
};

/// Iterates single-word masks bit by bit.
template <typename Fn>
inline void for_each_bit(Mask bits, Fn&& fn) {
  while (bits) {
    fn(static_cast<Vertex>(std::countr_zero(bits)));
    bits &= bits - 1;
  }
}

/// Next mask with the same popcount in increasing numeric order (Gosper's hack).
/// Returns 0 past the last k-subset of an n-bit universe.
inline Mask next_same_popcount(Mask x, std::size_t n) {
  const Mask c = x & (~x + 1);
  const Mask r = x + c;
  if (r == 0)
    return 0;
  const Mask next = (((r ^ x) >> 2) / c) | r;
  if (n < word_bits && (next >> n) != 0)
    return 0;
  return next;
}

} // namespace totdom
