#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace chordal {

/// Largest vertex label a VertexSet can hold. Vertices are 1-based.
inline constexpr int kMaxVertex = 64;

/// A finite set of vertices from {1..64}, stored as a bitmask where vertex v
/// occupies bit v-1.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  /// VertexSet::of({1, 2, 3}). Throws VertexOutOfRange for labels outside 1..64.
  static VertexSet of(std::initializer_list<int> members);
  static VertexSet from_members(std::span<const int> members);

  /// {1, ..., n}; empty when n <= 0.
  static constexpr VertexSet first(int n) {
    if (n <= 0) return VertexSet{};
    if (n >= 64) return VertexSet(~std::uint64_t{0});
    return VertexSet{(std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(int v) const {
    return v >= 1 && v <= kMaxVertex && ((bits_ >> (v - 1)) & 1u) != 0;
  }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(VertexSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  VertexSet with(int v) const;
  VertexSet without(int v) const;

  /// Smallest / largest member; 0 for the empty set.
  constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  constexpr int max() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  std::vector<int> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b) + 1);
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order: by cardinality, then lexicographically on the ascending
/// member sequence ({1,2,3} < {1,2,4} < {1,3,4} < {2,3,4}).
constexpr bool canonical_less(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct CanonicalLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const { return canonical_less(a, b); }
};

/// "1 2 3" style rendering (the text file format).
std::string to_text(VertexSet s);
/// "{1,2,3}" rendering for diagnostics.
std::string to_string(VertexSet s);
/// "123" rendering when every label is a single digit, else "1.2.13".
std::string to_compact(VertexSet s);

/// Calls f(VertexSet) for every k-subset of s, in canonical order.
template <class F>
void for_each_k_subset(VertexSet s, int k, F&& f) {
  const std::vector<int> m = s.members();
  const int n = static_cast<int>(m.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t bits = 0;
    for (int i : idx) bits |= std::uint64_t{1} << (m[static_cast<std::size_t>(i)] - 1);
    f(VertexSet(bits));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) return;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
  }
}

/// Binomial coefficient; 0 outside 0 <= k <= n.
std::uint64_t binomial(int n, int k);

}  // namespace chordal
