#pragma once

// Faces of simplicial complexes as fixed-width vertex bit masks.

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace srball {

inline constexpr int kMaxVertices = 128;

/// A set of vertex indices in [0, 128), stored as a 128-bit mask.
class Face {
 public:
  constexpr Face() = default;

  Face(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  template <class Range>
  static Face from(const Range& vertices) {
    Face f;
    for (int v : vertices) f.insert(v);
    return f;
  }

  /// {0, ..., n-1}
  static Face prefix(int n) {
    assert(n >= 0 && n <= kMaxVertices);
    Face f;
    if (n >= 64) {
      f.lo_ = ~std::uint64_t{0};
      f.hi_ = n == 128 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n - 64)) - 1;
    } else {
      f.lo_ = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
    }
    return f;
  }

  void insert(int v) {
    assert(v >= 0 && v < kMaxVertices);
    if (v < 64)
      lo_ |= std::uint64_t{1} << v;
    else
      hi_ |= std::uint64_t{1} << (v - 64);
  }

  void erase(int v) {
    assert(v >= 0 && v < kMaxVertices);
    if (v < 64)
      lo_ &= ~(std::uint64_t{1} << v);
    else
      hi_ &= ~(std::uint64_t{1} << (v - 64));
  }

  [[nodiscard]] Face with(int v) const {
    Face f = *this;
    f.insert(v);
    return f;
  }

  [[nodiscard]] Face without(int v) const {
    Face f = *this;
    f.erase(v);
    return f;
  }

  [[nodiscard]] bool contains(int v) const {
    if (v < 0 || v >= kMaxVertices) return false;
    return v < 64 ? (lo_ >> v) & 1 : (hi_ >> (v - 64)) & 1;
  }

  [[nodiscard]] bool subset_of(Face o) const {
    return (lo_ & ~o.lo_) == 0 && (hi_ & ~o.hi_) == 0;
  }

  [[nodiscard]] bool intersects(Face o) const {
    return (lo_ & o.lo_) != 0 || (hi_ & o.hi_) != 0;
  }

  [[nodiscard]] int size() const { return std::popcount(lo_) + std::popcount(hi_); }
  [[nodiscard]] bool empty() const { return lo_ == 0 && hi_ == 0; }

  /// Smallest vertex, or -1 for the empty face.
  [[nodiscard]] int min_vertex() const {
    if (lo_) return std::countr_zero(lo_);
    if (hi_) return 64 + std::countr_zero(hi_);
    return -1;
  }

  /// Largest vertex, or -1 for the empty face.
  [[nodiscard]] int max_vertex() const {
    if (hi_) return 127 - std::countl_zero(hi_);
    if (lo_) return 63 - std::countl_zero(lo_);
    return -1;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t w = lo_; w; w &= w - 1) fn(std::countr_zero(w));
    for (std::uint64_t w = hi_; w; w &= w - 1) fn(64 + std::countr_zero(w));
  }

  [[nodiscard]] std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  friend Face operator|(Face a, Face b) { return raw(a.lo_ | b.lo_, a.hi_ | b.hi_); }
  friend Face operator&(Face a, Face b) { return raw(a.lo_ & b.lo_, a.hi_ & b.hi_); }
  friend Face operator^(Face a, Face b) { return raw(a.lo_ ^ b.lo_, a.hi_ ^ b.hi_); }
  /// Set difference.
  friend Face operator-(Face a, Face b) { return raw(a.lo_ & ~b.lo_, a.hi_ & ~b.hi_); }
  Face& operator|=(Face o) { return *this = *this | o; }
  Face& operator&=(Face o) { return *this = *this & o; }

  friend bool operator==(Face, Face) = default;

  [[nodiscard]] std::uint64_t low_word() const { return lo_; }
  [[nodiscard]] std::uint64_t high_word() const { return hi_; }

  [[nodiscard]] std::size_t hash() const {
    std::uint64_t h = lo_ * 0x9E3779B97F4A7C15ull;
    h ^= hi_ + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

 private:
  static Face raw(std::uint64_t lo, std::uint64_t hi) {
    Face f;
    f.lo_ = lo;
    f.hi_ = hi;
    return f;
  }

  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
};

struct FaceHash {
  std::size_t operator()(Face f) const { return f.hash(); }
};

/// Arbitrary strict total order on the raw mask (for sorted containers).
inline bool raw_less(Face a, Face b) {
  return a.high_word() != b.high_word() ? a.high_word() < b.high_word() : a.low_word() < b.low_word();
}

/// Lexicographic order of the sorted vertex lists.
inline bool lex_less(Face a, Face b) {
  const Face diff = a ^ b;
  if (diff.empty()) return false;
  const int x = diff.min_vertex();
  // The lists agree below x; the one holding x is smaller unless the other ends there.
  if (a.contains(x)) return !(b - Face::prefix(x + 1)).empty();
  return (a - Face::prefix(x + 1)).empty();
}

/// Canonical facet order: by size, then lexicographically.
inline bool canonical_less(Face a, Face b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

}  // namespace srball
