#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chordal/clutter.hpp"

namespace chordal {

struct Simpliciality {
  bool simplicial = false;
  /// e lies in no circuit, so N[e] = e is trivially a clique.
  bool vacuous = false;
};

/// Throws SizeViolation unless |e| = d - 1.
Simpliciality simpliciality(const Clutter& c, VertexSet e);
bool is_simplicial(const Clutter& c, VertexSet e);

/// Simplicial members of SC(C), canonical order. Vacuous elements are never
/// included.
std::vector<VertexSet> simplicial_set(const Clutter& c);

/// Elimination order e_1..e_t of (d-1)-sets.
struct EliminationCertificate {
  std::vector<VertexSet> order;
};

enum class Strategy { kGreedy, kBacktracking };

struct SearchOptions {
  Strategy strategy = Strategy::kBacktracking;
  /// Maximum number of dead states remembered; least recently used states
  /// are evicted beyond this.
  std::size_t memo_capacity = std::size_t{1} << 20;
};

struct ChordalityVerdict {
  bool chordal = false;
  /// Present when chordal.
  EliminationCertificate certificate;
  /// Present when not chordal: a nonempty clutter with no simplicial
  /// submaximal circuit that the search ran into.
  std::optional<Clutter> stuck;
  std::size_t states_explored = 0;
};

/// Greedy always removes the canonically smallest simplicial element and is
/// not authoritative on a negative answer. Backtracking explores every
/// simplicial choice with a memo of dead states and decides membership exactly.
ChordalityVerdict chordality_check(const Clutter& c, const SearchOptions& options = {});
ChordalityVerdict chordality_check(const Clutter& c, Strategy strategy);

struct ReplayResult {
  /// Number of leading steps that were simplicial when applied.
  std::size_t valid_steps = 0;
  /// Clutter after the valid steps.
  Clutter remaining;
};

/// Applies deletions in order while each element is simplicial. Elements
/// outside SC (vacuously simplicial) are accepted as no-op steps.
ReplayResult replay_certificate(const Clutter& c, std::span<const VertexSet> order);

/// True iff every step is simplicial and the final clutter is empty.
bool verify_certificate(const Clutter& c, std::span<const VertexSet> order);

/// Every (d-1)-subset of [n] containing v, ordered by comparing the
/// remaining elements lexicographically. Each element is simplicial in the
/// successive deletions from C_{n,d}. Requires n >= d >= 2 and 1 <= v <= n.
std::vector<VertexSet> complete_clutter_order(int n, int d, int v);

/// Concatenated orders eliminating C_{n,d} completely (v = 1, then 2, ...).
EliminationCertificate complete_clutter_certificate(int n, int d);

}  // namespace chordal
