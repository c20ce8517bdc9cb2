#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "chordal/clutter.hpp"
#include "chordal/field.hpp"
#include "chordal/monomial.hpp"

namespace chordal {

/// Graded Betti numbers beta_{i,i+j} of an ideal (not of the quotient ring),
/// keyed by homological degree i and shift j. Only nonzero entries are kept.
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(FieldSpec field, int indeg) : field_(field), indeg_(indeg) {}

  FieldSpec field() const { return field_; }
  int indeg() const { return indeg_; }

  /// beta_{i,i+j}.
  std::int64_t at(int i, int j) const;
  void add(int i, int j, std::int64_t value);

  const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  FieldSpec field_;
  int indeg_ = 0;
  std::map<std::pair<int, int>, std::int64_t> entries_;
};

/// Largest shift j with a nonzero entry. Throws ZeroTable.
int regularity(const BettiTable& t);
/// Smallest i carrying an entry with j > d; nullopt encodes infinity
/// (linear resolution). Throws ZeroTable.
std::optional<int> index_of(const BettiTable& t, int d);
std::optional<int> index_of(const BettiTable& t);
/// Largest i with a nonzero entry. Throws ZeroTable.
int projdim(const BettiTable& t);
/// Every entry sits in row j = d. Throws ZeroTable.
bool has_linear_resolution(const BettiTable& t, int d);
bool has_linear_resolution(const BettiTable& t);

struct BettiOptions {
  unsigned threads = 1;
};

/// Betti table of I(complement(C)) by Hochster's formula over the clique
/// complex. Throws ZeroIdeal when the complement is empty.
BettiTable betti_table_hochster(const Clutter& c, FieldSpec field, const BettiOptions& options = {});

/// Square-free ideals only (InvalidArgument otherwise). The zero ideal gives
/// the zero table.
BettiTable betti_table_hochster(const MonomialIdeal& ideal, FieldSpec field, const BettiOptions& options = {});

inline constexpr std::size_t kDefaultTaylorBound = 12;

/// Taylor complex strands graded by lcm, reduced to Betti numbers by ranks.
/// Throws TooManyGenerators beyond max_generators.
BettiTable betti_table_taylor(const MonomialIdeal& ideal, FieldSpec field,
                              std::size_t max_generators = kDefaultTaylorBound);

/// Hochster for square-free ideals, Taylor for small ones, otherwise Hochster
/// on the polarization.
BettiTable betti_table(const MonomialIdeal& ideal, FieldSpec field, const BettiOptions& options = {});

}  // namespace chordal
