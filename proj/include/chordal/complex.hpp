#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chordal/clutter.hpp"
#include "chordal/field.hpp"

namespace chordal {

/// Finite simplicial complex on a labelled vertex set, stored as its facets
/// together with the full face list (canonical order, the empty face first).
///
/// A complex without facets is the void complex (no faces at all). The
/// complex {{}} has the empty set as its only facet.
class SimplicialComplex {
 public:
  /// The void complex on no vertices.
  SimplicialComplex() = default;

  /// Downward closure of the facets, on ground set {1..n}.
  static SimplicialComplex from_facets(int n, std::vector<VertexSet> facets);
  static SimplicialComplex from_facets(int n, VertexSet ground, std::vector<VertexSet> facets);
  static SimplicialComplex void_complex(int n);
  /// All subsets of the ground set.
  static SimplicialComplex simplex(int n, VertexSet ground);

  int n() const { return n_; }
  VertexSet ground() const { return ground_; }
  bool is_void() const { return facets_.empty(); }
  /// Largest face size minus one; -1 for {{}} and -2 for the void complex.
  int dimension() const;

  std::span<const VertexSet> facets() const { return facets_; }
  std::span<const VertexSet> faces() const { return faces_; }
  bool contains(VertexSet face) const;

  /// Faces contained in w; ground set becomes w.
  SimplicialComplex induced(VertexSet w) const;

  /// f[k] = number of faces with k elements, k = 0..dimension()+1.
  std::vector<std::size_t> face_counts() const;

 private:
  int n_ = 0;
  VertexSet ground_;
  std::vector<VertexSet> facets_;
  std::vector<VertexSet> faces_;
};

/// Faces are the cliques of C (every set smaller than d included). This is
/// the Stanley-Reisner complex of the circuit ideal I(complement(C)).
SimplicialComplex clique_complex(const Clutter& c);

/// Faces are the subsets of `ground` containing none of the nonfaces.
SimplicialComplex stanley_reisner_complex(int n, VertexSet ground, std::span<const VertexSet> nonfaces);

/// h[k + 1] = dim H~_k(K; field) for k = -1..dimension(). The void complex
/// gives an empty vector; {{}} gives {1}.
std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& k, FieldSpec field);

/// Same, for a face list that is downward closed and sorted by size.
std::vector<std::size_t> reduced_homology_of_faces(std::span<const VertexSet> faces, FieldSpec field);

}  // namespace chordal
