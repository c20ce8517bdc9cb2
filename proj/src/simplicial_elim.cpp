#include "chordal/simplicial_elim.hpp"

#include <algorithm>
#include <string>

#include "chordal/error.hpp"
#include "lru_set.hpp"

namespace chordal {

Simpliciality simpliciality(const Clutter& c, VertexSet e) {
  const int d = c.uniformity();
  if (e.size() != d - 1) {
    throw Error(ErrorCode::kSizeViolation, to_string(e) + " is not a " + std::to_string(d - 1) + "-set");
  }
  const VertexSet n = closed_neighborhood(c, e);
  if (n == e) return {true, true};
  return {is_clique(c, n), false};
}

bool is_simplicial(const Clutter& c, VertexSet e) { return simpliciality(c, e).simplicial; }

std::vector<VertexSet> simplicial_set(const Clutter& c) {
  std::vector<VertexSet> out;
  for (VertexSet e : submaximal_circuits(c)) {
    if (is_clique(c, closed_neighborhood(c, e))) out.push_back(e);
  }
  return out;
}

namespace {

class BacktrackingSearch {
 public:
  explicit BacktrackingSearch(std::size_t capacity) : dead_(capacity) {}

  bool run(const Clutter& c, std::vector<VertexSet>& path) {
    ++explored_;
    if (c.empty()) return true;
    if (dead_.contains(c)) return false;
    const std::vector<VertexSet> candidates = simplicial_set(c);
    if (candidates.empty() && !stuck_) stuck_ = c;
    for (VertexSet e : candidates) {
      path.push_back(e);
      if (run(delete_submaximal(c, e), path)) return true;
      path.pop_back();
    }
    dead_.insert(c);
    return false;
  }

  std::size_t explored() const { return explored_; }
  std::optional<Clutter> take_stuck() { return std::move(stuck_); }

 private:
  detail::LruSet<Clutter, ClutterHash> dead_;
  std::optional<Clutter> stuck_;
  std::size_t explored_ = 0;
};

ChordalityVerdict greedy(const Clutter& c) {
  ChordalityVerdict v;
  Clutter cur = c;
  while (!cur.empty()) {
    ++v.states_explored;
    const std::vector<VertexSet> candidates = simplicial_set(cur);
    if (candidates.empty()) {
      v.stuck = std::move(cur);
      return v;
    }
    v.certificate.order.push_back(candidates.front());
    cur = delete_submaximal(cur, candidates.front());
  }
  v.chordal = true;
  return v;
}

/// (d-1)-subsets of ground containing v, ordered by their members other than v.
std::vector<VertexSet> order_through(VertexSet ground, int d, int v) {
  std::vector<VertexSet> out;
  for_each_k_subset(ground.without(v), d - 2, [&](VertexSet rest) { out.push_back(rest.with(v)); });
  std::sort(out.begin(), out.end(),
            [v](VertexSet a, VertexSet b) { return canonical_less(a.without(v), b.without(v)); });
  return out;
}

}  // namespace

ChordalityVerdict chordality_check(const Clutter& c, const SearchOptions& options) {
  c.uniformity();
  if (options.strategy == Strategy::kGreedy) return greedy(c);
  BacktrackingSearch search(options.memo_capacity);
  ChordalityVerdict v;
  v.chordal = search.run(c, v.certificate.order);
  v.states_explored = search.explored();
  if (!v.chordal) {
    v.certificate.order.clear();
    v.stuck = search.take_stuck();
  }
  return v;
}

ChordalityVerdict chordality_check(const Clutter& c, Strategy strategy) {
  SearchOptions options;
  options.strategy = strategy;
  return chordality_check(c, options);
}

ReplayResult replay_certificate(const Clutter& c, std::span<const VertexSet> order) {
  ReplayResult r{0, c};
  const int d = c.uniformity();
  for (VertexSet e : order) {
    if (e.size() != d - 1 || !is_simplicial(r.remaining, e)) break;
    r.remaining = delete_submaximal(r.remaining, e);
    ++r.valid_steps;
  }
  return r;
}

bool verify_certificate(const Clutter& c, std::span<const VertexSet> order) {
  const ReplayResult r = replay_certificate(c, order);
  return r.valid_steps == order.size() && r.remaining.empty();
}

std::vector<VertexSet> complete_clutter_order(int n, int d, int v) {
  if (d < 2 || n < d) {
    throw Error(ErrorCode::kInvalidArgument, "complete_clutter_order needs n >= d >= 2");
  }
  if (v < 1 || v > n) {
    throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
  }
  return order_through(VertexSet::first(n), d, v);
}

EliminationCertificate complete_clutter_certificate(int n, int d) {
  EliminationCertificate cert;
  if (d < 2 || n < d) return cert;
  Clutter cur = complete_clutter(n, d);
  VertexSet ground = VertexSet::first(n);
  while (!cur.empty()) {
    const int v = ground.min();
    for (VertexSet e : order_through(ground, d, v)) {
      const Clutter next = delete_submaximal(cur, e);
      if (next.size() != cur.size()) cert.order.push_back(e);
      cur = next;
    }
    ground = ground.without(v);
  }
  return cert;
}

}  // namespace chordal
