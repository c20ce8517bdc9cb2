#include "chordal/clutter.hpp"

#include <algorithm>
#include <string>

#include "chordal/error.hpp"

namespace chordal {

namespace {

void check_label_bound(int n) {
  if (n < 0 || n > kMaxVertex) {
    throw Error(ErrorCode::kVertexOutOfRange, "ground-set size " + std::to_string(n) + " outside 0..64");
  }
}

void sort_canonical(std::vector<VertexSet>& family) {
  std::sort(family.begin(), family.end(), CanonicalLess{});
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

std::optional<int> common_size(std::span<const VertexSet> family) {
  if (family.empty()) return std::nullopt;
  const int s = family.front().size();
  for (VertexSet f : family) {
    if (f.size() != s) return std::nullopt;
  }
  return s;
}

}  // namespace

Clutter::Clutter(int n, std::vector<VertexSet> circuits, std::optional<int> d)
    : Clutter(n, VertexSet::first(n), std::move(circuits), d) {}

Clutter::Clutter(int n, VertexSet ground, std::vector<VertexSet> circuits, std::optional<int> d)
    : n_(n), ground_(ground), d_(d), circuits_(std::move(circuits)) {
  check_label_bound(n);
  if (!ground_.subset_of(VertexSet::first(n))) {
    throw Error(ErrorCode::kVertexOutOfRange, "ground set " + to_string(ground_) + " exceeds [" +
                                                  std::to_string(n) + "]");
  }
  if (d_ && *d_ < 0) throw Error(ErrorCode::kInvalidArgument, "negative uniformity degree");
  for (VertexSet f : circuits_) {
    if (!f.subset_of(ground_)) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "circuit " + to_string(f) + " not inside ground set " + to_string(ground_));
    }
    if (d_ && f.size() != *d_) {
      throw Error(ErrorCode::kNotUniform, "circuit " + to_string(f) + " does not have " +
                                              std::to_string(*d_) + " elements");
    }
  }
  sort_canonical(circuits_);
  if (!d_) d_ = common_size(circuits_);
  if (!d_) {
    // Sorted by size, so only earlier (smaller or equal) sets can be contained in later ones.
    for (std::size_t j = 0; j < circuits_.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (circuits_[i].proper_subset_of(circuits_[j])) {
          throw Error(ErrorCode::kAntichainViolation,
                      to_string(circuits_[i]) + " is contained in " + to_string(circuits_[j]));
        }
      }
    }
  }
}

int Clutter::uniformity() const {
  if (!d_) throw Error(ErrorCode::kNotUniform, "clutter has no uniformity degree");
  return *d_;
}

bool Clutter::contains(VertexSet circuit) const {
  return std::binary_search(circuits_.begin(), circuits_.end(), circuit, CanonicalLess{});
}

int Clutter::degree(int v) const {
  int k = 0;
  for (VertexSet f : circuits_) k += f.contains(v) ? 1 : 0;
  return k;
}

VertexSet Clutter::support() const {
  VertexSet s;
  for (VertexSet f : circuits_) s = s | f;
  return s;
}

std::size_t Clutter::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ ground_.bits();
  for (VertexSet f : circuits_) {
    h ^= f.bits() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Clutter new_clutter(int n, std::vector<VertexSet> circuits, std::optional<int> d) {
  return Clutter(n, std::move(circuits), d);
}

Clutter complete_clutter_on(int n, VertexSet ground, int d) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "d must be positive");
  std::vector<VertexSet> all;
  all.reserve(static_cast<std::size_t>(binomial(ground.size(), d)));
  for_each_k_subset(ground, d, [&](VertexSet s) { all.push_back(s); });
  return Clutter(n, ground, std::move(all), d);
}

Clutter complete_clutter(int n, int d) {
  check_label_bound(n);
  return complete_clutter_on(n, VertexSet::first(n), d);
}

Clutter complement(const Clutter& c) {
  const int d = c.uniformity();
  std::vector<VertexSet> out;
  for_each_k_subset(c.ground(), d, [&](VertexSet s) {
    if (!c.contains(s)) out.push_back(s);
  });
  return Clutter(c.n(), c.ground(), std::move(out), d);
}

Clutter induced(const Clutter& c, VertexSet w) {
  const VertexSet ground = w & c.ground();
  return c.filtered([&](VertexSet f) { return f.subset_of(ground); }, ground);
}

VertexSet closed_neighborhood(const Clutter& c, VertexSet a) {
  const int d = c.uniformity();
  if (a.size() >= d) {
    throw Error(ErrorCode::kSizeViolation,
                "neighborhood of " + to_string(a) + " needs fewer than " + std::to_string(d) + " elements");
  }
  VertexSet n = a;
  for (VertexSet f : c.circuits()) {
    if (a.subset_of(f)) n = n | f;
  }
  return n;
}

bool is_clique(const Clutter& c, VertexSet v) {
  const int d = c.uniformity();
  if (v.size() < d) return true;
  std::uint64_t inside = 0;
  for (VertexSet f : c.circuits()) inside += f.subset_of(v) ? 1 : 0;
  return inside == binomial(v.size(), d);
}

Clutter delete_submaximal(const Clutter& c, VertexSet e) {
  const int d = c.uniformity();
  if (e.size() != d - 1) {
    throw Error(ErrorCode::kSizeViolation,
                to_string(e) + " is not a " + std::to_string(d - 1) + "-set");
  }
  return c.filtered([&](VertexSet f) { return !e.subset_of(f); }, c.ground());
}

std::vector<VertexSet> submaximal_circuits(const Clutter& c) {
  if (c.empty()) return {};
  c.uniformity();
  std::vector<VertexSet> out;
  for (VertexSet f : c.circuits()) {
    f.for_each([&](int v) { out.push_back(f.without(v)); });
  }
  sort_canonical(out);
  return out;
}

Clutter vertex_deletion(const Clutter& c, int v) {
  const VertexSet ground = c.ground().contains(v) ? c.ground().without(v) : c.ground();
  return c.filtered([&](VertexSet f) { return !f.contains(v); }, ground);
}

std::vector<VertexSet> minimal_sets(std::vector<VertexSet> family) {
  sort_canonical(family);
  std::vector<VertexSet> kept;
  for (VertexSet f : family) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [&](VertexSet g) { return g.subset_of(f); });
    if (!dominated) kept.push_back(f);
  }
  return kept;
}

Clutter vertex_contraction(const Clutter& c, int v) {
  if (!c.ground().contains(v)) return c;
  std::vector<VertexSet> shrunk;
  shrunk.reserve(c.size());
  for (VertexSet f : c.circuits()) shrunk.push_back(f.contains(v) ? f.without(v) : f);
  std::vector<VertexSet> minimal = minimal_sets(std::move(shrunk));
  std::optional<int> d = minimal.empty() ? c.d() : common_size(minimal);
  return Clutter(c.n(), c.ground().without(v), std::move(minimal), d);
}

Clutter apply_minor(const Clutter& c, std::span<const MinorStep> path) {
  Clutter cur = c;
  for (const MinorStep& step : path) {
    if (!cur.ground().contains(step.vertex)) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "minor step names vertex " + std::to_string(step.vertex) + " not in the current ground set");
    }
    cur = step.kind == MinorKind::kDeletion ? vertex_deletion(cur, step.vertex)
                                            : vertex_contraction(cur, step.vertex);
  }
  return cur;
}

}  // namespace chordal
