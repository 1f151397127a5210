#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace artin {

/// Index of a generator in the declared vertex order of a diagram.
using Gen = std::uint8_t;

/// A word over the generators; letters are vertex indices.
using Word = std::vector<Gen>;

/// Subsets of the generating set as bitmasks (rank is capped at 32).
using VertexSet = std::uint32_t;

inline constexpr std::size_t kMaxRank = 32;

inline constexpr VertexSet bit(Gen g) { return VertexSet{1} << g; }
inline constexpr bool contains(VertexSet set, Gen g) { return (set >> g) & 1u; }
inline constexpr bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }
inline int popcount(VertexSet set) { return __builtin_popcount(set); }

struct WordHash {
  std::size_t operator()(const Word &w) const noexcept {
    // FNV-1a
    std::uint64_t h = 1469598103934665603ull;
    for (Gen g : w) {
      h ^= g;
      h *= 1099511628211ull;
    }
    h ^= w.size();
    return static_cast<std::size_t>(h);
  }
};

/// ShortLex: shorter words first, then lexicographic in generator order.
inline bool shortlex_less(const Word &a, const Word &b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

struct ShortLexLess {
  bool operator()(const Word &a, const Word &b) const { return shortlex_less(a, b); }
};

inline Word concat(const Word &a, const Word &b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline VertexSet support(const Word &w) {
  VertexSet s = 0;
  for (Gen g : w)
    s |= bit(g);
  return s;
}

} // namespace artin
