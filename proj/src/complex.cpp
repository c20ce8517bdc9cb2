#include "chordal/complex.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "chordal/error.hpp"
#include "linalg.hpp"

namespace chordal {

namespace {

/// Level-wise generation in canonical order: each face of size k+1 extends a
/// face of size k by a larger vertex.
template <class IsFace>
std::vector<VertexSet> generate_faces(VertexSet ground, IsFace&& is_face) {
  std::vector<VertexSet> faces{VertexSet()};
  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  while (level_begin < level_end) {
    for (std::size_t i = level_begin; i < level_end; ++i) {
      const VertexSet s = faces[i];
      const int top = s.max();
      ground.for_each([&](int v) {
        if (v > top && is_face(s.with(v))) faces.push_back(s.with(v));
      });
    }
    level_begin = level_end;
    level_end = faces.size();
  }
  return faces;
}

std::vector<VertexSet> maximal_faces(std::span<const VertexSet> faces) {
  std::vector<VertexSet> out;
  // Larger faces come later, so scan from the back.
  for (auto it = faces.rbegin(); it != faces.rend(); ++it) {
    const VertexSet f = *it;
    const bool covered = std::any_of(out.begin(), out.end(), [f](VertexSet g) { return f.subset_of(g); });
    if (!covered) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<VertexSet> facets) {
  return from_facets(n, VertexSet::first(n), std::move(facets));
}

SimplicialComplex SimplicialComplex::from_facets(int n, VertexSet ground, std::vector<VertexSet> facets) {
  if (n < 0 || n > kMaxVertex || !ground.subset_of(VertexSet::first(n))) {
    throw Error(ErrorCode::kVertexOutOfRange, "bad ground set for a complex on " + std::to_string(n) + " vertices");
  }
  SimplicialComplex k;
  k.n_ = n;
  k.ground_ = ground;
  for (VertexSet f : facets) {
    if (!f.subset_of(ground)) {
      throw Error(ErrorCode::kVertexOutOfRange, "facet " + to_string(f) + " outside the ground set");
    }
  }
  if (facets.empty()) return k;
  std::unordered_set<std::uint64_t> seen;
  for (VertexSet f : facets) {
    // Enumerate the subsets of f.
    const std::uint64_t bits = f.bits();
    for (std::uint64_t s = bits;; s = (s - 1) & bits) {
      seen.insert(s);
      if (s == 0) break;
    }
  }
  k.faces_.reserve(seen.size());
  for (std::uint64_t s : seen) k.faces_.emplace_back(s);
  std::sort(k.faces_.begin(), k.faces_.end(), CanonicalLess{});
  k.facets_ = maximal_faces(k.faces_);
  return k;
}

SimplicialComplex SimplicialComplex::void_complex(int n) { return from_facets(n, {}); }

SimplicialComplex SimplicialComplex::simplex(int n, VertexSet ground) { return from_facets(n, ground, {ground}); }

int SimplicialComplex::dimension() const {
  if (faces_.empty()) return -2;
  return faces_.back().size() - 1;
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](VertexSet f) { return face.subset_of(f); });
}

SimplicialComplex SimplicialComplex::induced(VertexSet w) const {
  SimplicialComplex k;
  k.n_ = n_;
  k.ground_ = w & ground_;
  for (VertexSet f : faces_) {
    if (f.subset_of(w)) k.faces_.push_back(f);
  }
  k.facets_ = maximal_faces(k.faces_);
  return k;
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
  std::vector<std::size_t> f;
  for (VertexSet s : faces_) {
    const auto k = static_cast<std::size_t>(s.size());
    if (f.size() <= k) f.resize(k + 1, 0);
    ++f[k];
  }
  return f;
}

SimplicialComplex stanley_reisner_complex(int n, VertexSet ground, std::span<const VertexSet> nonfaces) {
  for (VertexSet nf : nonfaces) {
    if (nf.empty()) return SimplicialComplex::void_complex(n);
  }
  std::vector<VertexSet> faces = generate_faces(ground, [&](VertexSet s) {
    return std::none_of(nonfaces.begin(), nonfaces.end(), [s](VertexSet nf) { return nf.subset_of(s); });
  });
  return SimplicialComplex::from_facets(n, ground, maximal_faces(faces));
}

SimplicialComplex clique_complex(const Clutter& c) {
  const Clutter comp = complement(c);
  return stanley_reisner_complex(c.n(), c.ground(), comp.circuits());
}

std::vector<std::size_t> reduced_homology_of_faces(std::span<const VertexSet> faces, FieldSpec field) {
  if (faces.empty()) return {};
  // Group faces by size; faces arrive sorted by size.
  std::vector<std::vector<VertexSet>> by_size;
  for (VertexSet f : faces) {
    const auto k = static_cast<std::size_t>(f.size());
    if (by_size.size() <= k) by_size.resize(k + 1);
    by_size[k].push_back(f);
  }
  const std::size_t top = by_size.size();
  // rank_of[s] = rank of the boundary from size-s faces to size-(s-1) faces.
  std::vector<std::size_t> rank_of(top + 1, 0);
  for (std::size_t s = 1; s < top; ++s) {
    const auto& cols = by_size[s];
    const auto& rows = by_size[s - 1];
    if (cols.empty() || rows.empty()) continue;
    std::unordered_map<std::uint64_t, std::size_t> row_index;
    row_index.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r].bits(), r);
    detail::IntMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      int pos = 0;
      cols[c].for_each([&](int v) {
        auto it = row_index.find(cols[c].without(v).bits());
        if (it != row_index.end()) m(it->second, c) = (pos % 2 == 0) ? 1 : -1;
        ++pos;
      });
    }
    rank_of[s] = detail::rank(m, field);
  }
  std::vector<std::size_t> h(top, 0);
  for (std::size_t s = 0; s < top; ++s) {
    h[s] = by_size[s].size() - rank_of[s] - rank_of[s + 1];
  }
  return h;
}

std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& k, FieldSpec field) {
  return reduced_homology_of_faces(k.faces(), field);
}

}  // namespace chordal
