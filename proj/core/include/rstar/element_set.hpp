#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace rstar {

using Element = std::uint16_t;

inline constexpr std::size_t kMaxOrder = 256;

/// Fixed-width membership set over the element indices 0..kMaxOrder-1.
/// Bit i of the 256-bit word is element i.
class ElementSet {
 public:
  static constexpr std::size_t kWords = kMaxOrder / 64;

  constexpr ElementSet() = default;

  static ElementSet first_n(std::size_t n) {
    ElementSet s;
    for (std::size_t i = 0; i < n; ++i) s.insert(static_cast<Element>(i));
    return s;
  }

  static ElementSet of(std::initializer_list<Element> xs) {
    ElementSet s;
    for (auto x : xs) s.insert(x);
    return s;
  }

  void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  bool contains(Element e) const { return (words_[e >> 6] >> (e & 63)) & 1U; }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const { return size() == 0; }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Compares the membership words as unsigned 256-bit integers.
  friend std::strong_ordering compare_value(const ElementSet& a, const ElementSet& b) {
    for (std::size_t i = kWords; i-- > 0;) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    }
    return std::strong_ordering::equal;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        f(static_cast<Element>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// Canonical lattice order: cardinality first, then numeric value.
inline bool lattice_less(const ElementSet& a, const ElementSet& b) {
  const auto na = a.size();
  const auto nb = b.size();
  if (na != nb) return na < nb;
  return compare_value(a, b) < 0;
}

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace rstar
