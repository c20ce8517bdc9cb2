#include "chordal/betti.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "chordal/complex.hpp"
#include "chordal/error.hpp"
#include "linalg.hpp"
#include "parallel.hpp"

namespace chordal {

std::int64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::int64_t value) {
  if (value == 0) return;
  auto& slot = entries_[{i, j}];
  slot += value;
  if (slot == 0) entries_.erase({i, j});
}

namespace {

void require_nonzero(const BettiTable& t) {
  if (t.is_zero()) throw Error(ErrorCode::kZeroTable, "statistic of the zero table");
}

}  // namespace

int regularity(const BettiTable& t) {
  require_nonzero(t);
  int reg = 0;
  for (const auto& [key, value] : t.entries()) reg = std::max(reg, key.second);
  return reg;
}

std::optional<int> index_of(const BettiTable& t, int d) {
  require_nonzero(t);
  std::optional<int> first;
  for (const auto& [key, value] : t.entries()) {
    if (key.second > d && (!first || key.first < *first)) first = key.first;
  }
  return first;
}

std::optional<int> index_of(const BettiTable& t) { return index_of(t, t.indeg()); }

int projdim(const BettiTable& t) {
  require_nonzero(t);
  int p = 0;
  for (const auto& [key, value] : t.entries()) p = std::max(p, key.first);
  return p;
}

bool has_linear_resolution(const BettiTable& t, int d) {
  require_nonzero(t);
  return std::all_of(t.entries().begin(), t.entries().end(), [d](const auto& e) { return e.first.second == d; });
}

bool has_linear_resolution(const BettiTable& t) { return has_linear_resolution(t, t.indeg()); }

namespace {

/// Union closure of the generator supports: the square-free lcm lattice.
std::vector<VertexSet> lcm_lattice(std::span<const VertexSet> supports) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<VertexSet> out;
  for (VertexSet s : supports) {
    if (seen.insert(s.bits()).second) out.push_back(s);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (VertexSet s : supports) {
      const VertexSet u = out[i] | s;
      if (seen.insert(u.bits()).second) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

BettiTable hochster(int nvars, std::span<const VertexSet> supports, FieldSpec field, int indeg, unsigned threads) {
  BettiTable table(field, indeg);
  if (supports.empty()) return table;
  const SimplicialComplex delta = stanley_reisner_complex(nvars, VertexSet::first(nvars), supports);
  const std::vector<VertexSet> lattice = lcm_lattice(supports);
  std::mutex merge;
  detail::parallel_for(lattice.size(), threads, [&](unsigned, std::size_t idx) {
    const VertexSet w = lattice[idx];
    std::vector<VertexSet> faces;
    for (VertexSet f : delta.faces()) {
      if (f.subset_of(w)) faces.push_back(f);
    }
    const std::vector<std::size_t> h = reduced_homology_of_faces(faces, field);
    std::lock_guard<std::mutex> lock(merge);
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h[k] == 0) continue;
      // h[k] is H~_{k-1}; it contributes to row j = k + 1 at i = |W| - j.
      const int j = static_cast<int>(k) + 1;
      table.add(w.size() - j, j, static_cast<std::int64_t>(h[k]));
    }
  });
  return table;
}

}  // namespace

BettiTable betti_table_hochster(const Clutter& c, FieldSpec field, const BettiOptions& options) {
  const int d = c.uniformity();
  const Clutter comp = complement(c);
  if (comp.empty()) throw Error(ErrorCode::kZeroIdeal, "the circuit ideal of a complete clutter is zero");
  return hochster(c.n(), comp.circuits(), field, d, options.threads);
}

BettiTable betti_table_hochster(const MonomialIdeal& ideal, FieldSpec field, const BettiOptions& options) {
  if (!ideal.is_square_free()) {
    throw Error(ErrorCode::kInvalidArgument, "Hochster's formula needs a square-free ideal");
  }
  std::vector<VertexSet> supports;
  supports.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) supports.push_back(g.support());
  return hochster(ideal.nvars(), supports, field, ideal.min_degree(), options.threads);
}

BettiTable betti_table_taylor(const MonomialIdeal& ideal, FieldSpec field, std::size_t max_generators) {
  const std::size_t r = ideal.size();
  if (r > max_generators || r > 20) {
    throw Error(ErrorCode::kTooManyGenerators,
                std::to_string(r) + " generators exceed the Taylor bound " + std::to_string(max_generators));
  }
  BettiTable table(field, ideal.min_degree());
  if (r == 0) return table;
  const auto gens = ideal.generators();
  const std::uint32_t full = (std::uint32_t{1} << r) - 1;

  // lcm of every nonempty subset, built from the subset without its top bit.
  std::vector<Monomial> lcms(std::size_t{full} + 1);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int top = 31 - std::countl_zero(s);
    const std::uint32_t rest = s & ~(std::uint32_t{1} << top);
    lcms[s] = rest == 0 ? gens[static_cast<std::size_t>(top)] : lcm(lcms[rest], gens[static_cast<std::size_t>(top)]);
  }
  std::map<std::vector<int>, std::vector<std::uint32_t>> strands;
  for (std::uint32_t s = 1; s <= full; ++s) strands[lcms[s].exponents()].push_back(s);

  for (const auto& [alpha, members] : strands) {
    int total_degree = 0;
    for (int a : alpha) total_degree += a;
    // by_size[k] = subsets with k + 1 generators (homological degree k).
    std::vector<std::vector<std::uint32_t>> by_size;
    for (std::uint32_t s : members) {
      const auto k = static_cast<std::size_t>(std::popcount(s) - 1);
      if (by_size.size() <= k) by_size.resize(k + 1);
      by_size[k].push_back(s);
    }
    const std::size_t top = by_size.size();
    std::vector<std::size_t> rank_of(top + 1, 0);
    for (std::size_t k = 1; k < top; ++k) {
      const auto& cols = by_size[k];
      const auto& rows = by_size[k - 1];
      if (cols.empty() || rows.empty()) continue;
      std::map<std::uint32_t, std::size_t> row_index;
      for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
      detail::IntMatrix m(rows.size(), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) {
        int pos = 0;
        for (std::uint32_t b = cols[c]; b != 0; b &= b - 1) {
          const std::uint32_t face = cols[c] & ~(b & (~b + 1));
          auto it = row_index.find(face);
          // Faces with a smaller lcm map to zero in this strand.
          if (it != row_index.end()) m(it->second, c) = (pos % 2 == 0) ? 1 : -1;
          ++pos;
        }
      }
      rank_of[k] = detail::rank(m, field);
    }
    for (std::size_t k = 0; k < top; ++k) {
      const std::size_t beta = by_size[k].size() - rank_of[k] - rank_of[k + 1];
      if (beta != 0) {
        const int i = static_cast<int>(k);
        table.add(i, total_degree - i, static_cast<std::int64_t>(beta));
      }
    }
  }
  return table;
}

BettiTable betti_table(const MonomialIdeal& ideal, FieldSpec field, const BettiOptions& options) {
  if (ideal.is_square_free()) return betti_table_hochster(ideal, field, options);
  if (ideal.size() <= kDefaultTaylorBound) return betti_table_taylor(ideal, field);
  const Polarization p = polarize(ideal);
  BettiTable t = betti_table_hochster(p.ideal, field, options);
  BettiTable out(field, ideal.min_degree());
  for (const auto& [key, value] : t.entries()) out.add(key.first, key.second, value);
  return out;
}

}  // namespace chordal
