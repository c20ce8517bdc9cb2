#include "chordal/nice.hpp"

#include "chordal/error.hpp"

namespace chordal {

NiceReport check_nice_conditions(const MonomialIdeal& ideal, const Monomial& u, VertexSet l_vars, FieldSpec field) {
  const std::optional<int> d = ideal.generated_degree();
  if (!d) throw Error(ErrorCode::kDegreeMismatch, "the ideal must be nonzero and generated in one degree");
  if (u.degree() != *d - 1) {
    throw Error(ErrorCode::kDegreeMismatch, "u must have degree " + std::to_string(*d - 1));
  }
  if (u.nvars() != ideal.nvars()) throw Error(ErrorCode::kInvalidArgument, "u has the wrong number of variables");
  if (l_vars.empty() || !l_vars.subset_of(VertexSet::first(ideal.nvars()))) {
    throw Error(ErrorCode::kInvalidArgument, "L_vars must be a nonempty set of variables");
  }

  NiceReport r;
  std::vector<Monomial> l_gens;
  std::vector<Monomial> l_in_ideal;
  l_vars.for_each([&](int x) {
    const Monomial xu = u.times_variable(x);
    l_gens.push_back(xu);
    if (ideal.contains(xu)) l_in_ideal.push_back(xu);
  });
  r.l = MonomialIdeal(ideal.nvars(), l_gens);
  r.l_in_i = ideal.contains(r.l);

  // Generators of the intersection: the minimized lcm(x_i u, v).
  r.intersection = intersection(ideal, r.l);

  r.b = !r.intersection.is_zero() && r.intersection.generated_degree() == d;

  if (r.l_in_i) {
    r.c = true;
  } else {
    r.c = true;
    for (const Monomial& v : ideal.generators()) {
      bool found = false;
      l_vars.for_each([&](int x) {
        if (!found && ideal.contains(u.times_variable(x)) && u.exponent(x) + 1 <= v.exponent(x)) found = true;
      });
      if (!found) {
        r.c = false;
        break;
      }
    }
  }

  if (r.l_in_i) {
    r.d = true;
  } else {
    const MonomialIdeal l_prime(ideal.nvars(), l_in_ideal);
    r.d = !l_prime.is_zero() && r.intersection == l_prime;
  }

  const BettiTable t = betti_table(r.intersection, field);
  r.a = !t.is_zero() && r.intersection.min_degree() == *d && has_linear_resolution(t, *d);
  return r;
}

}  // namespace chordal
