#include "chordal/atlas.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "chordal/betti.hpp"
#include "chordal/error.hpp"
#include "chordal/simplicial_elim.hpp"
#include "parallel.hpp"

namespace chordal {

std::size_t AtlasResult::violation_count() const {
  std::size_t n = 0;
  for (const AtlasRecord& r : records) n += r.violations.size();
  return n;
}

std::string atlas_id(const Clutter& c) {
  if (c.empty()) return "-";
  std::string out;
  for (VertexSet f : c.circuits()) {
    if (!out.empty()) out += ',';
    out += to_compact(f);
  }
  return out;
}

std::vector<VertexSet> canonical_form(const Clutter& c) {
  const std::vector<int> labels = c.ground().members();
  if (labels.size() > 8) throw Error(ErrorCode::kInvalidArgument, "canonical_form supports at most 8 vertices");
  std::vector<int> perm(labels.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::vector<VertexSet> best;
  bool first = true;
  do {
    std::vector<VertexSet> image;
    for (VertexSet f : c.circuits()) {
      std::uint64_t bits = 0;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (f.contains(labels[i])) bits |= std::uint64_t{1} << perm[i];
      }
      image.emplace_back(bits);
    }
    std::sort(image.begin(), image.end(), CanonicalLess{});
    if (first || std::lexicographical_compare(image.begin(), image.end(), best.begin(), best.end(), CanonicalLess{})) {
      best = std::move(image);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

bool linres_over(const Clutter& c, FieldSpec field) {
  if (complement(c).empty()) return true;
  return has_linear_resolution(betti_table_hochster(c, field), c.uniformity());
}

}  // namespace

AtlasRecord classify(const Clutter& c) {
  AtlasRecord r;
  r.id = atlas_id(c);
  r.clutter = c;
  AtlasFlags& f = r.flags;
  f.vtv = is_vtv_chordal(c);
  f.w_chordal = is_w_chordal(c);
  f.e_chordal = is_e_chordal(c).outcome;
  f.chordal = chordality_check(c).chordal;
  f.linres_gf2 = linres_over(c, FieldSpec::gf(2));
  f.linres_gf3 = linres_over(c, FieldSpec::gf(3));
  if (f.vtv && !f.w_chordal) r.violations.push_back("vtv => w_chordal");
  if (f.w_chordal && !f.chordal) r.violations.push_back("w_chordal => chordal");
  if (f.e_chordal == Tristate::kYes && !f.chordal) r.violations.push_back("e_chordal => chordal");
  if (f.chordal && !f.linres_gf2) r.violations.push_back("chordal => linres_gf2");
  if (f.chordal && !f.linres_gf3) r.violations.push_back("chordal => linres_gf3");
  return r;
}

AtlasResult atlas(int n, int d, const AtlasOptions& options) {
  if (d < 1 || n < d || n > 16) throw Error(ErrorCode::kInvalidArgument, "atlas needs 1 <= d <= n <= 16");
  AtlasResult result;
  result.n = n;
  result.d = d;
  std::vector<VertexSet> all;
  for_each_k_subset(VertexSet::first(n), d, [&](VertexSet f) { all.push_back(f); });
  const std::size_t m = all.size();

  auto family = [&](const std::vector<bool>& keep) {
    std::vector<VertexSet> circuits;
    for (std::size_t k = 0; k < m; ++k) {
      if (keep[k]) circuits.push_back(all[k]);
    }
    return Clutter(n, std::move(circuits), d);
  };

  std::vector<Clutter> inputs;
  result.exhaustive = m < 63 && (std::uint64_t{1} << m) <= options.budget;
  if (result.exhaustive) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<bool> keep(m);
      for (std::size_t k = 0; k < m; ++k) keep[k] = ((mask >> k) & 1u) != 0;
      inputs.push_back(family(keep));
    }
  } else {
    std::mt19937_64 gen(options.seed);
    std::set<std::vector<bool>> seen;
    for (std::uint64_t s = 0; s < options.budget; ++s) {
      std::vector<bool> keep(m);
      for (std::size_t k = 0; k < m; ++k) keep[k] = (gen() >> 63) != 0;
      if (seen.insert(keep).second) inputs.push_back(family(keep));
    }
  }
  if (options.iso_reduce) {
    std::set<std::vector<std::uint64_t>> classes;
    std::vector<Clutter> reps;
    for (Clutter& c : inputs) {
      std::vector<std::uint64_t> key;
      for (VertexSet f : canonical_form(c)) key.push_back(f.bits());
      if (classes.insert(key).second) reps.push_back(std::move(c));
    }
    inputs = std::move(reps);
  }

  result.records.resize(inputs.size());
  detail::parallel_for(inputs.size(), options.threads,
                       [&](unsigned, std::size_t k) { result.records[k] = classify(inputs[k]); });
  for (const AtlasRecord& r : result.records) {
    if (r.flags.linres_gf2 && r.flags.linres_gf3 && !r.flags.chordal) result.findings.push_back(r.id);
  }
  return result;
}

}  // namespace chordal
