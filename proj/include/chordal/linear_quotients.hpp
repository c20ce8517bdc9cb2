#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chordal/chordal_variants.hpp"
#include "chordal/monomial.hpp"

namespace chordal {

struct LinearQuotientsOptions {
  /// Wall-clock budget; 0 means unlimited.
  double budget_seconds = 60.0;
};

struct LinearQuotientsResult {
  Tristate outcome = Tristate::kUnknown;
  /// Generator order witnessing Yes.
  std::vector<Monomial> order;
  std::size_t states_explored = 0;
};

/// Searches generator orders m_1, ..., m_r such that every colon ideal
/// (m_1, ..., m_{i-1}) : m_i is generated by variables. The placed set alone
/// determines which generators may come next, so dead sets are memoized.
/// Throws TooManyGenerators beyond 64 generators.
LinearQuotientsResult has_linear_quotients(const MonomialIdeal& ideal, const LinearQuotientsOptions& options = {});

/// (prefix) : m is generated by variables (true for an empty prefix).
bool colon_is_linear(std::span<const Monomial> prefix, const Monomial& m);

/// Every colon ideal along the order is generated by variables.
bool verify_linear_quotients_order(std::span<const Monomial> order);

}  // namespace chordal
