#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "chordal/clutter.hpp"
#include "chordal/field.hpp"

namespace chordal {

class SimplicialComplex;

/// For every pair of circuits F1, F2 through v, some circuit lies inside
/// (F1 | F2) - {v}. Vacuously true when v lies in at most one circuit.
/// Throws VertexOutOfRange when v is not in the ground set.
bool is_w_simplicial(const Clutter& c, int v);

/// Every minor has a W-simplicial vertex. Trivial minors (empty ground set,
/// empty family, or the family {{}}) count as having the property.
bool is_w_chordal(const Clutter& c);

/// v lies in exactly one circuit. Throws VertexOutOfRange.
bool is_free_vertex(const Clutter& c, int v);

/// Every minor has a free vertex (trivial minors as for is_w_chordal).
bool is_vtv_chordal(const Clutter& c);

/// Build steps for generalized chordal clutters.
struct StartStep {
  int n = 0;
  int d = 0;
};

/// Glue a complete clutter on n' vertices that shares the i vertices of
/// `shared` with the current clutter; the remaining n' - i vertices are fresh
/// labels appended after the current n. When `shared` is absent, the i
/// smallest ground vertices are used. The shared set must be a clique.
struct GlueStep {
  int i = 0;
  int n_prime = 0;
  std::optional<VertexSet> shared;
};

/// Add circuit F through the (d-1)-set e, which must lie in no circuit.
/// Vertices of F outside the ground set are added to it.
struct AddCircuitStep {
  VertexSet f;
  VertexSet e;
};

using BuildStep = std::variant<StartStep, GlueStep, AddCircuitStep>;

/// Applies the steps in order; the first must be a Start. Throws InvalidStep
/// naming the violated precondition.
Clutter generate_e_chordal(std::span<const BuildStep> script);

enum class Tristate { kNo, kYes, kUnknown };

const char* to_string(Tristate t) noexcept;

struct EChordalOptions {
  /// Upper bound on distinct states visited before giving up with Unknown.
  std::size_t state_budget = 2'000'000;
};

struct EChordalVerdict {
  Tristate outcome = Tristate::kUnknown;
  std::size_t states_explored = 0;
};

/// Reverse search over the inverse build moves: remove a circuit owning a
/// (d-1)-subset that no other circuit contains, or remove a vertex whose
/// closed star is a clique together with its circuits. Succeeds when the
/// family becomes empty or complete on its support.
EChordalVerdict is_e_chordal(const Clutter& c, const EChordalOptions& options = {});

/// H~_l(K_W) = 0 over the field for every W in the ground set.
bool is_resolution_l_chordal(const SimplicialComplex& k, int l, FieldSpec field);

}  // namespace chordal
