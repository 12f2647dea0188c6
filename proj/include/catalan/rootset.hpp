#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>

namespace catalan {

// Subset of positive-root indices. 128 bits covers every crystallographic
// type up to E8 (120 positive roots).
struct RootSet {
  std::uint64_t lo = 0, hi = 0;

  static RootSet full(int n) {
    assert(n >= 0 && n <= 128);
    RootSet s;
    if (n >= 64) {
      s.lo = ~0ULL;
      s.hi = (n == 128) ? ~0ULL : ((1ULL << (n - 64)) - 1);
    } else {
      s.lo = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    }
    return s;
  }

  bool test(int i) const {
    return ((i < 64 ? lo >> i : hi >> (i - 64)) & 1u) != 0;
  }
  void set(int i) { (i < 64 ? lo : hi) |= 1ULL << (i & 63); }
  void reset(int i) { (i < 64 ? lo : hi) &= ~(1ULL << (i & 63)); }

  int count() const { return std::popcount(lo) + std::popcount(hi); }
  bool none() const { return lo == 0 && hi == 0; }
  bool any() const { return !none(); }

  friend RootSet operator&(RootSet a, RootSet b) { return {a.lo & b.lo, a.hi & b.hi}; }
  friend RootSet operator|(RootSet a, RootSet b) { return {a.lo | b.lo, a.hi | b.hi}; }
  friend RootSet operator-(RootSet a, RootSet b) { return {a.lo & ~b.lo, a.hi & ~b.hi}; }
  RootSet& operator|=(RootSet b) { lo |= b.lo; hi |= b.hi; return *this; }
  RootSet& operator&=(RootSet b) { lo &= b.lo; hi &= b.hi; return *this; }

  friend bool operator==(const RootSet&, const RootSet&) = default;
  // Arbitrary strict order; used only for canonical sorting of enumerations.
  friend bool operator<(const RootSet& a, const RootSet& b) {
    return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
  }

  bool subset_of(RootSet b) const { return (lo & ~b.lo) == 0 && (hi & ~b.hi) == 0; }

  // Calls f(i) for each member, in increasing index order.
  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t w = lo; w;) {
      int i = std::countr_zero(w);
      w &= w - 1;
      f(i);
    }
    for (std::uint64_t w = hi; w;) {
      int i = std::countr_zero(w);
      w &= w - 1;
      f(64 + i);
    }
  }
};

struct RootSetHash {
  std::size_t operator()(const RootSet& s) const {
    std::uint64_t h = s.lo * 0x9e3779b97f4a7c15ULL;
    h ^= s.hi + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace catalan
