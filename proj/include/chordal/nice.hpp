#pragma once

#include "chordal/betti.hpp"
#include "chordal/monomial.hpp"

namespace chordal {

/// The four equivalent descriptions of when I meets L = (x_i u : x_i in
/// L_vars) in a linear ideal, each evaluated independently.
struct NiceReport {
  MonomialIdeal l;
  MonomialIdeal intersection;
  bool l_in_i = false;
  /// I cap L has a d-linear resolution (from its Betti table).
  bool a = false;
  /// I cap L is nonzero and generated in degree d.
  bool b = false;
  /// L in I, or every v in G(I) has some x_i in L_vars with x_i u in I and
  /// nu_i(u) + 1 <= nu_i(v).
  bool c = false;
  /// L in I, or I cap L = (x_i u : x_i in L_vars, x_i u in I) and is nonzero.
  bool d = false;

  bool agree() const { return a == b && b == c && c == d; }
};

/// I must be nonzero and generated in degree d, u of degree d - 1, L_vars a
/// nonempty set of variable indices. Throws DegreeMismatch or InvalidArgument.
NiceReport check_nice_conditions(const MonomialIdeal& ideal, const Monomial& u, VertexSet l_vars,
                                 FieldSpec field = FieldSpec());

}  // namespace chordal
