#include "chordal/vertex_set.hpp"

#include "chordal/error.hpp"

namespace chordal {

namespace {

std::uint64_t bit_of(int v) {
  if (v < 1 || v > kMaxVertex) {
    throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(v) + " outside 1..64");
  }
  return std::uint64_t{1} << (v - 1);
}

}  // namespace

VertexSet VertexSet::of(std::initializer_list<int> members) {
  std::uint64_t bits = 0;
  for (int v : members) bits |= bit_of(v);
  return VertexSet(bits);
}

VertexSet VertexSet::from_members(std::span<const int> members) {
  std::uint64_t bits = 0;
  for (int v : members) bits |= bit_of(v);
  return VertexSet(bits);
}

VertexSet VertexSet::with(int v) const { return VertexSet(bits_ | bit_of(v)); }

VertexSet VertexSet::without(int v) const { return VertexSet(bits_ & ~bit_of(v)); }

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::string to_text(VertexSet s) {
  std::string out;
  s.for_each([&](int v) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  });
  return out;
}

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(v);
  });
  return out + "}";
}

std::string to_compact(VertexSet s) {
  if (s.max() <= 9) {
    std::string out;
    s.for_each([&](int v) { out += static_cast<char>('0' + v); });
    return out.empty() ? "{}" : out;
  }
  std::string out;
  s.for_each([&](int v) {
    if (!out.empty()) out += '.';
    out += std::to_string(v);
  });
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace chordal
