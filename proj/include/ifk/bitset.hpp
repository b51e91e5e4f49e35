#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ifk {

/// Fixed-width dynamic bitset over indices [0, size()).
///
/// Ordering compares the sets as sorted index lists, lexicographically; with
/// identifiers kept in sorted order this matches lexicographic order on the
/// sorted identifier lists, which is what canonical output relies on.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static Bitset full(std::size_t size) {
    Bitset b(size);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  /// Low `size` bits of `mask`; `size` must be <= 64.
  static Bitset from_mask(std::size_t size, std::uint64_t mask) {
    Bitset b(size);
    if (!b.words_.empty()) b.words_[0] = mask;
    b.trim();
    return b;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  Bitset& set(std::size_t i) {
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
    return *this;
  }
  Bitset& reset(std::size_t i) {
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    return *this;
  }
  Bitset& set(std::size_t i, bool v) { return v ? set(i) : reset(i); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  /// Set difference.
  Bitset& operator-=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  Bitset complement() const {
    Bitset r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  /// Lowest member >= `from`, or size() if none.
  std::size_t next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t k = from / 64;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from % 64));
    while (true) {
      if (w) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == words_.size()) return size_;
      w = words_[k];
    }
  }
  std::size_t first() const { return next(0); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      for (std::uint64_t w = words_[k]; w; w &= w - 1)
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  /// Low 64 bits; only meaningful when size() <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  bool operator==(const Bitset& o) const = default;

  std::strong_ordering operator<=>(const Bitset& o) const {
    if (auto c = size_ <=> o.size_; c != 0) return c;
    // First index where membership differs decides: the side holding it
    // is smaller iff the other side still has a larger element.
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t d = words_[k] ^ o.words_[k];
      if (!d) continue;
      std::size_t i = k * 64 + static_cast<std::size_t>(std::countr_zero(d));
      const Bitset& holder = test(i) ? *this : o;
      const Bitset& other = test(i) ? o : *this;
      bool holder_less = other.next(i + 1) != other.size_;
      bool this_less = (&holder == this) == holder_less;
      return this_less ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = size_;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  void trim() {
    if (size_ % 64 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace ifk
