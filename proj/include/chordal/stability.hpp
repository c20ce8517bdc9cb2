#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "chordal/betti.hpp"
#include "chordal/clutter.hpp"

namespace chordal {

/// C minus the circuits in A. Requires e simplicial in C (a vacuous e is
/// accepted) and every member of A to be a circuit of C through e. Throws
/// NotSimplicial or CircuitNotThroughE.
Clutter delete_circuits_through(const Clutter& c, VertexSet e, std::span<const VertexSet> a);

struct FieldStability {
  FieldSpec field;
  BettiTable c_table;
  BettiTable d_table;
  /// beta_{i,i+j} agree for every j > d.
  bool nonlinear_equal = false;
  bool reg_equal = false;
  bool index_equal = false;
  /// projdim(I(complement C)) <= projdim(I(complement D)).
  bool projdim_le = false;
  /// Checked only when A is every circuit through e and e is in SC(C):
  /// projdim(I(complement D)) = |ground| - d.
  std::optional<bool> projdim_formula;

  bool holds() const {
    return nonlinear_equal && reg_equal && index_equal && projdim_le && projdim_formula.value_or(true);
  }
};

struct StabilityReport {
  Clutter c;
  VertexSet e;
  std::vector<VertexSet> a;
  Clutter d;
  bool full_star = false;
  std::vector<FieldStability> fields;

  bool holds() const;
};

struct StabilityOptions {
  /// Diagnostic mode skips the simpliciality precondition so counterexamples
  /// for non-simplicial e can be exhibited.
  bool require_simplicial = true;
  unsigned threads = 1;
};

/// Compares the Betti tables of I(complement C) and I(complement D) per field.
/// Throws NotSimplicial, CircuitNotThroughE, or ZeroIdeal when C is complete.
StabilityReport check_stability(const Clutter& c, VertexSet e, std::span<const VertexSet> a,
                                std::span<const FieldSpec> fields, const StabilityOptions& options = {});

/// Each d-subset of [n], in canonical order, is kept when the next draw
/// u = (x >> 11) * 2^-53 from std::mt19937_64(seed) satisfies u < density.
Clutter random_clutter(int n, int d, double density, std::uint64_t seed);

struct MonotonicityVerdict {
  BettiTable j_table;
  BettiTable i_table;
  /// beta_{i,i+d}(J) <= beta_{i,i+d}(I) for every i.
  bool holds = false;
};

struct StabilityInstance {
  Clutter c;
  VertexSet e;
  std::vector<VertexSet> a;
};

/// Seeded corpus of (C, e, A): n uniform in d+1..n_max, density uniform in
/// [0.3, 0.9), e uniform in Simp(C), and A either the full star of e (one
/// draw in three) or a uniform random subset of it. Complete clutters and
/// clutters without simplicial elements are redrawn.
std::vector<StabilityInstance> stability_corpus(int n_max, int d, std::size_t count, std::uint64_t seed);

/// J and I are given by their generator families (square-free, degree d),
/// with J inside I. Throws DegreeMismatch or InvalidArgument.
MonotonicityVerdict betti_monotonicity_check(const Clutter& j, const Clutter& i, FieldSpec field);

}  // namespace chordal
