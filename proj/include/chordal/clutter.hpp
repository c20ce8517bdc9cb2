#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chordal/vertex_set.hpp"

namespace chordal {

/// A clutter: an antichain of circuits over a ground set of labelled
/// vertices. Circuits are kept deduplicated and sorted in canonical order, so
/// two clutters with the same family compare equal regardless of input order.
///
/// n() is the ambient label bound (vertices live in 1..n); ground() is the
/// current vertex set, which shrinks under vertex deletion/contraction while
/// the remaining labels are preserved.
class Clutter {
 public:
  Clutter() = default;

  /// Ground set {1..n}. Validates labels, deduplicates, checks the antichain
  /// condition and (when d is given) uniformity. With d absent, d is inferred
  /// when the family is nonempty and all circuits share one cardinality.
  Clutter(int n, std::vector<VertexSet> circuits, std::optional<int> d = std::nullopt);
  Clutter(int n, VertexSet ground, std::vector<VertexSet> circuits,
          std::optional<int> d = std::nullopt);

  int n() const { return n_; }
  VertexSet ground() const { return ground_; }
  int vertex_count() const { return ground_.size(); }

  std::optional<int> d() const { return d_; }
  bool is_uniform() const { return d_.has_value(); }
  /// Returns d or throws NotUniform.
  int uniformity() const;

  std::span<const VertexSet> circuits() const { return circuits_; }
  std::size_t size() const { return circuits_.size(); }
  bool empty() const { return circuits_.empty(); }

  bool contains(VertexSet circuit) const;
  /// Number of circuits containing v.
  int degree(int v) const;
  /// Union of all circuits.
  VertexSet support() const;

  std::size_t hash() const;

  /// Keeps the circuits satisfying keep(F) on the given ground set. A
  /// subfamily of an antichain is an antichain, so no revalidation happens;
  /// the caller guarantees every kept circuit lies inside new_ground. An unset
  /// d is inferred when the kept circuits share one size.
  template <class Pred>
  Clutter filtered(Pred&& keep, VertexSet new_ground) const {
    Clutter out;
    out.n_ = n_;
    out.ground_ = new_ground;
    out.d_ = d_;
    out.circuits_.reserve(circuits_.size());
    for (VertexSet f : circuits_) {
      if (keep(f)) out.circuits_.push_back(f);
    }
    if (!out.d_ && !out.circuits_.empty() &&
        out.circuits_.front().size() == out.circuits_.back().size()) {
      out.d_ = out.circuits_.front().size();
    }
    return out;
  }

  friend bool operator==(const Clutter& a, const Clutter& b) = default;

 private:
  int n_ = 0;
  VertexSet ground_;
  std::optional<int> d_;
  std::vector<VertexSet> circuits_;
};

struct ClutterHash {
  std::size_t operator()(const Clutter& c) const { return c.hash(); }
};

Clutter new_clutter(int n, std::vector<VertexSet> circuits, std::optional<int> d = std::nullopt);

/// All d-subsets of [n]; the empty family on n isolated points when n < d.
Clutter complete_clutter(int n, int d);

/// The complete d-uniform clutter on an arbitrary vertex set.
Clutter complete_clutter_on(int n, VertexSet ground, int d);

/// C_{ground,d} minus C. Throws NotUniform when C carries no d.
Clutter complement(const Clutter& c);

/// Circuits contained in w; ground set becomes w (labels preserved).
Clutter induced(const Clutter& c, VertexSet w);

/// A together with every c such that A + c lies inside some circuit.
/// Throws SizeViolation when |A| >= d.
VertexSet closed_neighborhood(const Clutter& c, VertexSet a);

/// True iff every d-subset of v is a circuit (vacuously when |v| < d).
bool is_clique(const Clutter& c, VertexSet v);

/// Removes the circuits containing the (d-1)-set e. Throws SizeViolation.
Clutter delete_submaximal(const Clutter& c, VertexSet e);

/// All (d-1)-subsets of circuits, canonical order.
std::vector<VertexSet> submaximal_circuits(const Clutter& c);

/// Drops circuits through v and removes v from the ground set.
Clutter vertex_deletion(const Clutter& c, int v);

/// Removes v from every circuit and keeps the inclusion-minimal results.
Clutter vertex_contraction(const Clutter& c, int v);

enum class MinorKind { kDeletion, kContraction };

struct MinorStep {
  int vertex = 0;
  MinorKind kind = MinorKind::kDeletion;
};

using MinorPath = std::vector<MinorStep>;

/// Applies the steps in order. Throws VertexOutOfRange when a step names a
/// vertex that is not in the current ground set (this includes repeats).
Clutter apply_minor(const Clutter& c, std::span<const MinorStep> path);

/// Inclusion-minimal members of a family (pairwise containment filter).
std::vector<VertexSet> minimal_sets(std::vector<VertexSet> family);

}  // namespace chordal
