#include "chordal/chordal_variants.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "chordal/complex.hpp"
#include "chordal/error.hpp"

namespace chordal {

namespace {

void require_in_ground(const Clutter& c, int v) {
  if (!c.ground().contains(v)) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " not in ground set " + to_string(c.ground()));
  }
}

bool is_trivial_minor(const Clutter& c) {
  if (c.ground().empty() || c.empty()) return true;
  return c.size() == 1 && c.circuits().front().empty();
}

bool w_simplicial_unchecked(const Clutter& c, int v) {
  std::vector<VertexSet> through;
  for (VertexSet f : c.circuits()) {
    if (f.contains(v)) through.push_back(f);
  }
  for (std::size_t a = 0; a < through.size(); ++a) {
    for (std::size_t b = a + 1; b < through.size(); ++b) {
      const VertexSet u = (through[a] | through[b]).without(v);
      bool found = false;
      for (VertexSet g : c.circuits()) {
        if (g.subset_of(u)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

/// Visits every minor of c once and checks `has_good_vertex` on each
/// nontrivial one.
template <class Pred>
bool every_minor(const Clutter& c, Pred&& has_good_vertex) {
  std::unordered_set<Clutter, ClutterHash> seen;
  std::vector<Clutter> stack{c};
  seen.insert(c);
  while (!stack.empty()) {
    Clutter cur = std::move(stack.back());
    stack.pop_back();
    if (!is_trivial_minor(cur)) {
      bool ok = false;
      cur.ground().for_each([&](int v) {
        if (!ok && has_good_vertex(cur, v)) ok = true;
      });
      if (!ok) return false;
    }
    cur.ground().for_each([&](int v) {
      for (Clutter next : {vertex_deletion(cur, v), vertex_contraction(cur, v)}) {
        if (seen.insert(next).second) stack.push_back(std::move(next));
      }
    });
  }
  return true;
}

}  // namespace

bool is_w_simplicial(const Clutter& c, int v) {
  require_in_ground(c, v);
  return w_simplicial_unchecked(c, v);
}

bool is_w_chordal(const Clutter& c) { return every_minor(c, w_simplicial_unchecked); }

bool is_free_vertex(const Clutter& c, int v) {
  require_in_ground(c, v);
  return c.degree(v) == 1;
}

bool is_vtv_chordal(const Clutter& c) {
  return every_minor(c, [](const Clutter& m, int v) { return m.degree(v) == 1; });
}

Clutter generate_e_chordal(std::span<const BuildStep> script) {
  auto invalid = [](std::size_t step, const std::string& why) {
    return Error(ErrorCode::kInvalidStep, "step " + std::to_string(step) + ": " + why);
  };
  if (script.empty() || !std::holds_alternative<StartStep>(script.front())) {
    throw invalid(0, "script must begin with a start step");
  }
  const StartStep& s0 = std::get<StartStep>(script.front());
  if (s0.n < 0 || s0.n > kMaxVertex || s0.d < 1) throw invalid(0, "start needs 0 <= n <= 64 and d >= 1");
  const int d = s0.d;
  Clutter c = complete_clutter(s0.n, d);
  c = Clutter(c.n(), c.ground(), {c.circuits().begin(), c.circuits().end()}, d);

  for (std::size_t k = 1; k < script.size(); ++k) {
    if (std::holds_alternative<StartStep>(script[k])) throw invalid(k, "start may only appear first");
    std::vector<VertexSet> circuits(c.circuits().begin(), c.circuits().end());
    if (const auto* g = std::get_if<GlueStep>(&script[k])) {
      if (g->i < 0 || g->i >= g->n_prime) throw invalid(k, "glue needs 0 <= i < n'");
      VertexSet shared;
      if (g->shared) {
        shared = *g->shared;
        if (shared.size() != g->i) throw invalid(k, "shared set size differs from i");
        if (!shared.subset_of(c.ground())) throw invalid(k, "shared set outside the ground set");
      } else {
        if (g->i > c.vertex_count()) throw invalid(k, "i exceeds the number of vertices");
        int taken = 0;
        c.ground().for_each([&](int v) {
          if (taken < g->i) {
            shared = shared.with(v);
            ++taken;
          }
        });
      }
      if (!is_clique(c, shared)) throw invalid(k, "shared set " + to_string(shared) + " is not a clique");
      const int fresh = g->n_prime - g->i;
      const int new_n = c.n() + fresh;
      if (new_n > kMaxVertex) throw invalid(k, "glue exceeds 64 vertices");
      VertexSet block = shared;
      for (int v = c.n() + 1; v <= new_n; ++v) block = block.with(v);
      for_each_k_subset(block, d, [&](VertexSet f) { circuits.push_back(f); });
      c = Clutter(new_n, c.ground() | block, std::move(circuits), d);
    } else {
      const auto& a = std::get<AddCircuitStep>(script[k]);
      if (a.f.size() != d) throw invalid(k, "circuit " + to_string(a.f) + " does not have d elements");
      if (a.e.size() != d - 1 || !a.e.subset_of(a.f)) throw invalid(k, "e must be a (d-1)-subset of F");
      for (VertexSet f : c.circuits()) {
        if (a.e.subset_of(f)) throw invalid(k, to_string(a.e) + " is a submaximal circuit");
      }
      circuits.push_back(a.f);
      c = Clutter(std::max(c.n(), a.f.max()), c.ground() | a.f, std::move(circuits), d);
    }
  }
  return c;
}

const char* to_string(Tristate t) noexcept {
  switch (t) {
    case Tristate::kNo: return "no";
    case Tristate::kYes: return "yes";
    case Tristate::kUnknown: return "unknown";
  }
  return "unknown";
}

namespace {

class EChordalSearch {
 public:
  EChordalSearch(int d, std::size_t budget) : d_(d), budget_(budget) {}

  Tristate run(const Clutter& c) {
    if (c.size() == binomial(c.support().size(), d_)) return Tristate::kYes;
    if (!dead_.insert(c).second) return Tristate::kNo;
    if (dead_.size() > budget_) return Tristate::kUnknown;

    Tristate result = Tristate::kNo;
    auto visit = [&](const Clutter& next) {
      if (result == Tristate::kYes) return;
      const Tristate t = run(next);
      if (t == Tristate::kYes || t == Tristate::kUnknown) result = t;
    };

    // Undo a glue: drop a vertex whose closed star is a clique.
    for (int v : c.support().members()) {
      VertexSet star = VertexSet().with(v);
      for (VertexSet f : c.circuits()) {
        if (f.contains(v)) star = star | f;
      }
      if (is_clique(c, star)) visit(vertex_deletion(c, v));
      if (result != Tristate::kNo) return result;
    }
    // Undo an added circuit: F owns a (d-1)-subset no other circuit contains.
    for (VertexSet f : c.circuits()) {
      bool owns_private = false;
      f.for_each([&](int x) {
        if (owns_private) return;
        const VertexSet e = f.without(x);
        int holders = 0;
        for (VertexSet g : c.circuits()) {
          if (e.subset_of(g)) ++holders;
        }
        owns_private = holders == 1;
      });
      if (owns_private) visit(c.filtered([f](VertexSet g) { return g != f; }, c.ground()));
      if (result != Tristate::kNo) return result;
    }
    return result;
  }

  std::size_t explored() const { return dead_.size(); }

 private:
  int d_;
  std::size_t budget_;
  std::unordered_set<Clutter, ClutterHash> dead_;
};

}  // namespace

EChordalVerdict is_e_chordal(const Clutter& c, const EChordalOptions& options) {
  if (c.empty()) return {Tristate::kYes, 0};
  const int d = c.uniformity();
  EChordalSearch search(d, options.state_budget);
  EChordalVerdict v;
  v.outcome = search.run(c);
  v.states_explored = search.explored();
  return v;
}

bool is_resolution_l_chordal(const SimplicialComplex& k, int l, FieldSpec field) {
  if (l < -1) throw Error(ErrorCode::kInvalidArgument, "l must be at least -1");
  bool ok = true;
  const std::uint64_t ground = k.ground().bits();
  // Every subset of the ground set, including the empty one.
  for (std::uint64_t w = ground;; w = (w - 1) & ground) {
    const std::vector<std::size_t> h = reduced_homology_dims(k.induced(VertexSet(w)), field);
    const std::size_t idx = static_cast<std::size_t>(l + 1);
    if (idx < h.size() && h[idx] != 0) {
      ok = false;
      break;
    }
    if (w == 0) break;
  }
  return ok;
}

}  // namespace chordal
