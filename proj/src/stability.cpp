#include "chordal/stability.hpp"

#include <algorithm>
#include <random>

#include "chordal/error.hpp"
#include "chordal/simplicial_elim.hpp"

namespace chordal {

namespace {

Clutter remove_circuits(const Clutter& c, VertexSet e, std::span<const VertexSet> a) {
  for (VertexSet f : a) {
    if (!c.contains(f)) {
      throw Error(ErrorCode::kCircuitNotThroughE, to_string(f) + " is not a circuit");
    }
    if (!e.subset_of(f)) {
      throw Error(ErrorCode::kCircuitNotThroughE, to_string(f) + " does not contain " + to_string(e));
    }
  }
  return c.filtered([&](VertexSet f) { return std::find(a.begin(), a.end(), f) == a.end(); }, c.ground());
}

}  // namespace

Clutter delete_circuits_through(const Clutter& c, VertexSet e, std::span<const VertexSet> a) {
  if (!is_simplicial(c, e)) throw Error(ErrorCode::kNotSimplicial, to_string(e) + " is not simplicial");
  return remove_circuits(c, e, a);
}

bool StabilityReport::holds() const {
  return std::all_of(fields.begin(), fields.end(), [](const FieldStability& f) { return f.holds(); });
}

StabilityReport check_stability(const Clutter& c, VertexSet e, std::span<const VertexSet> a,
                                std::span<const FieldSpec> fields, const StabilityOptions& options) {
  const int d = c.uniformity();
  if (e.size() != d - 1) throw Error(ErrorCode::kSizeViolation, to_string(e) + " is not a (d-1)-set");
  StabilityReport r;
  r.c = c;
  r.e = e;
  r.a.assign(a.begin(), a.end());
  r.d = options.require_simplicial ? delete_circuits_through(c, e, a) : remove_circuits(c, e, a);

  bool in_sc = false;
  std::size_t star = 0;
  for (VertexSet f : c.circuits()) {
    if (e.subset_of(f)) {
      in_sc = true;
      ++star;
    }
  }
  std::vector<VertexSet> distinct(r.a);
  std::sort(distinct.begin(), distinct.end(), CanonicalLess{});
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  r.full_star = in_sc && distinct.size() == star;

  BettiOptions bopts;
  bopts.threads = options.threads;
  for (FieldSpec field : fields) {
    FieldStability fs;
    fs.field = field;
    fs.c_table = betti_table_hochster(r.c, field, bopts);
    fs.d_table = betti_table_hochster(r.d, field, bopts);
    fs.nonlinear_equal = true;
    for (const BettiTable* t : {&fs.c_table, &fs.d_table}) {
      for (const auto& [key, value] : t->entries()) {
        if (key.second > d && fs.c_table.at(key.first, key.second) != fs.d_table.at(key.first, key.second)) {
          fs.nonlinear_equal = false;
        }
      }
    }
    fs.reg_equal = regularity(fs.c_table) == regularity(fs.d_table);
    fs.index_equal = index_of(fs.c_table, d) == index_of(fs.d_table, d);
    fs.projdim_le = projdim(fs.c_table) <= projdim(fs.d_table);
    if (r.full_star) fs.projdim_formula = projdim(fs.d_table) == c.vertex_count() - d;
    r.fields.push_back(std::move(fs));
  }
  return r;
}

Clutter random_clutter(int n, int d, double density, std::uint64_t seed) {
  if (d < 1 || n < 0 || n > kMaxVertex) throw Error(ErrorCode::kInvalidArgument, "random_clutter needs 0 <= n <= 64, d >= 1");
  std::mt19937_64 gen(seed);
  std::vector<VertexSet> circuits;
  for_each_k_subset(VertexSet::first(n), d, [&](VertexSet f) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    if (u < density) circuits.push_back(f);
  });
  return Clutter(n, std::move(circuits), d);
}

std::vector<StabilityInstance> stability_corpus(int n_max, int d, std::size_t count, std::uint64_t seed) {
  if (d < 2 || n_max <= d || n_max > 16) throw Error(ErrorCode::kInvalidArgument, "stability corpus needs 2 <= d < n_max <= 16");
  std::mt19937_64 gen(seed);
  auto uniform = [&gen](std::uint64_t k) { return static_cast<std::size_t>(gen() % k); };
  std::vector<StabilityInstance> out;
  while (out.size() < count) {
    const int n = d + 1 + static_cast<int>(uniform(static_cast<std::uint64_t>(n_max - d)));
    const double density = 0.3 + 0.6 * static_cast<double>(gen() >> 11) * 0x1.0p-53;
    Clutter c = random_clutter(n, d, density, gen());
    if (complement(c).empty()) continue;
    const std::vector<VertexSet> simp = simplicial_set(c);
    if (simp.empty()) continue;
    StabilityInstance inst{c, simp[uniform(simp.size())], {}};
    const bool full = uniform(3) == 0;
    for (VertexSet f : c.circuits()) {
      if (inst.e.subset_of(f) && (full || (gen() >> 63) != 0)) inst.a.push_back(f);
    }
    out.push_back(std::move(inst));
  }
  return out;
}

MonotonicityVerdict betti_monotonicity_check(const Clutter& j, const Clutter& i, FieldSpec field) {
  const int d = i.uniformity();
  if (!j.empty() && j.uniformity() != d) throw Error(ErrorCode::kDegreeMismatch, "J and I are generated in different degrees");
  for (VertexSet f : j.circuits()) {
    if (!i.contains(f)) throw Error(ErrorCode::kInvalidArgument, "J is not contained in I: " + to_string(f));
  }
  const int nvars = std::max(i.n(), j.n());
  MonotonicityVerdict v;
  v.j_table = betti_table_hochster(ideal_of(nvars, j.circuits()), field);
  v.i_table = betti_table_hochster(ideal_of(nvars, i.circuits()), field);
  v.holds = true;
  for (const auto& [key, value] : v.j_table.entries()) {
    if (key.second == d && value > v.i_table.at(key.first, d)) v.holds = false;
  }
  return v;
}

}  // namespace chordal
