#include "chordal/linear_quotients.hpp"

#include <chrono>
#include <unordered_set>

#include "chordal/error.hpp"

namespace chordal {

bool colon_is_linear(std::span<const Monomial> prefix, const Monomial& m) {
  if (prefix.empty()) return true;
  const MonomialIdeal q(m.nvars(), [&] {
    std::vector<Monomial> gens;
    for (const Monomial& p : prefix) gens.push_back(colon(p, m));
    return gens;
  }());
  for (const Monomial& g : q.generators()) {
    if (g.degree() != 1) return false;
  }
  return true;
}

bool verify_linear_quotients_order(std::span<const Monomial> order) {
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (!colon_is_linear(order.first(i), order[i])) return false;
  }
  return true;
}

namespace {

class OrderSearch {
 public:
  OrderSearch(const MonomialIdeal& ideal, double budget)
      : gens_(ideal.generators().begin(), ideal.generators().end()), r_(gens_.size()) {
    if (budget > 0) {
      deadline_ = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                          std::chrono::duration<double>(budget));
      timed_ = true;
    }
    q_support_.assign(r_ * r_, 0);
    q_linear_.assign(r_ * r_, false);
    for (std::size_t k = 0; k < r_; ++k) {
      for (std::size_t i = 0; i < r_; ++i) {
        const Monomial q = colon(gens_[k], gens_[i]);
        q_support_[k * r_ + i] = q.support().bits();
        q_linear_[k * r_ + i] = q.degree() == 1;
      }
    }
  }

  Tristate run(std::uint64_t placed, std::size_t count) {
    if (count == r_) return Tristate::kYes;
    if (dead_.count(placed) != 0) return Tristate::kNo;
    if (timed_ && (++ticks_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline_) {
      return Tristate::kUnknown;
    }
    ++explored_;
    for (std::size_t i = 0; i < r_; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((placed & bit) != 0 || !admissible(placed, i)) continue;
      order_.push_back(i);
      const Tristate t = run(placed | bit, count + 1);
      if (t != Tristate::kNo) return t;
      order_.pop_back();
    }
    dead_.insert(placed);
    return Tristate::kNo;
  }

  std::vector<Monomial> order() const {
    std::vector<Monomial> out;
    for (std::size_t i : order_) out.push_back(gens_[i]);
    return out;
  }

  std::size_t explored() const { return explored_; }

 private:
  bool admissible(std::uint64_t placed, std::size_t i) const {
    std::uint64_t linear = 0;
    for (std::uint64_t b = placed; b != 0; b &= b - 1) {
      const auto l = static_cast<std::size_t>(std::countr_zero(b));
      if (q_linear_[l * r_ + i]) linear |= q_support_[l * r_ + i];
    }
    for (std::uint64_t b = placed; b != 0; b &= b - 1) {
      const auto k = static_cast<std::size_t>(std::countr_zero(b));
      if ((q_support_[k * r_ + i] & linear) == 0) return false;
    }
    return true;
  }

  std::vector<Monomial> gens_;
  std::size_t r_;
  std::vector<std::uint64_t> q_support_;
  std::vector<bool> q_linear_;
  std::unordered_set<std::uint64_t> dead_;
  std::vector<std::size_t> order_;
  std::chrono::steady_clock::time_point deadline_;
  bool timed_ = false;
  std::size_t ticks_ = 0;
  std::size_t explored_ = 0;
};

}  // namespace

LinearQuotientsResult has_linear_quotients(const MonomialIdeal& ideal, const LinearQuotientsOptions& options) {
  if (ideal.size() > 64) {
    throw Error(ErrorCode::kTooManyGenerators, "linear quotient search supports at most 64 generators");
  }
  LinearQuotientsResult result;
  if (ideal.nvars() > kMaxVertex) throw Error(ErrorCode::kInvalidArgument, "more than 64 variables");
  OrderSearch search(ideal, options.budget_seconds);
  result.outcome = search.run(0, 0);
  result.states_explored = search.explored();
  if (result.outcome == Tristate::kYes) result.order = search.order();
  return result;
}

}  // namespace chordal
