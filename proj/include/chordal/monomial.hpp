#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chordal/clutter.hpp"

namespace chordal {

/// x_1^a_1 ... x_n^a_n over a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  /// Throws InvalidArgument on a negative exponent.
  explicit Monomial(std::vector<int> exponents);
  /// Product of the variables in `support`. Throws VertexOutOfRange when the
  /// support exceeds nvars.
  static Monomial square_free(int nvars, VertexSet support);
  /// The constant monomial 1.
  static Monomial one(int nvars) { return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0)); }

  int nvars() const { return static_cast<int>(exp_.size()); }
  /// nu_i for a 1-based variable index; 0 outside 1..nvars.
  int exponent(int var) const;
  const std::vector<int>& exponents() const { return exp_; }
  int degree() const;
  bool is_square_free() const;
  VertexSet support() const;

  bool divides(const Monomial& m) const;
  Monomial times_variable(int var) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exp_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// a / gcd(a, b): the generator that b contributes to (a) : b.
Monomial colon(const Monomial& a, const Monomial& b);

/// Degree first, then lexicographic with x_1 > x_2 > ... (so square-free
/// monomials follow the canonical order of their supports).
bool monomial_less(const Monomial& a, const Monomial& b);

/// "x1*x2^2*x5"; "1" for the constant monomial.
std::string to_string(const Monomial& m);

/// Monomial ideal given by its minimal generating set G(I), sorted with
/// monomial_less. The zero ideal has no generators.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Keeps only the minimal generators. Throws InvalidArgument when a
  /// generator has the wrong number of variables.
  MonomialIdeal(int nvars, std::vector<Monomial> generators);

  int nvars() const { return nvars_; }
  std::span<const Monomial> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_square_free() const;
  /// Common degree of all generators, if any.
  std::optional<int> generated_degree() const;
  /// Smallest generator degree; 0 for the zero ideal.
  int min_degree() const;

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int nvars_ = 0;
  std::vector<Monomial> gens_;
};

/// Square-free ideal generated by x_F for F in the family.
MonomialIdeal ideal_of(int nvars, std::span<const VertexSet> supports);

/// I(complement(C)) in n() variables; the zero ideal when C is complete.
MonomialIdeal circuit_ideal(const Clutter& c);

/// Generated by the minimized pairwise lcm's.
MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// (I : m), generated by g / gcd(g, m).
MonomialIdeal colon_ideal(const MonomialIdeal& ideal, const Monomial& m);

struct Polarization {
  MonomialIdeal ideal;
  /// origin[k] = (variable, power) for the k-th new variable (0-based k).
  std::vector<std::pair<int, int>> origin;
};

/// Replaces x_i^a by x_{i,1} ... x_{i,a}. Graded Betti numbers are unchanged.
/// Throws InvalidArgument when more than 64 variables would be needed.
Polarization polarize(const MonomialIdeal& ideal);

}  // namespace chordal
