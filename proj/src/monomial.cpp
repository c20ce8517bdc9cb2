#include "chordal/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "chordal/error.hpp"

namespace chordal {

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
  for (int a : exp_) {
    if (a < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
  }
}

Monomial Monomial::square_free(int nvars, VertexSet support) {
  if (!support.subset_of(VertexSet::first(nvars))) {
    throw Error(ErrorCode::kVertexOutOfRange, to_string(support) + " exceeds " + std::to_string(nvars) + " variables");
  }
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  support.for_each([&](int v) { e[static_cast<std::size_t>(v - 1)] = 1; });
  return Monomial(std::move(e));
}

int Monomial::exponent(int var) const {
  if (var < 1 || var > nvars()) return 0;
  return exp_[static_cast<std::size_t>(var - 1)];
}

int Monomial::degree() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }

bool Monomial::is_square_free() const {
  return std::all_of(exp_.begin(), exp_.end(), [](int a) { return a <= 1; });
}

VertexSet Monomial::support() const {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < exp_.size() && i < 64; ++i) {
    if (exp_[i] > 0) bits |= std::uint64_t{1} << i;
  }
  return VertexSet(bits);
}

bool Monomial::divides(const Monomial& m) const {
  const std::size_t n = std::max(exp_.size(), m.exp_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int a = i < exp_.size() ? exp_[i] : 0;
    const int b = i < m.exp_.size() ? m.exp_[i] : 0;
    if (a > b) return false;
  }
  return true;
}

Monomial Monomial::times_variable(int var) const {
  if (var < 1 || var > nvars()) {
    throw Error(ErrorCode::kVertexOutOfRange, "variable " + std::to_string(var) + " out of range");
  }
  Monomial out = *this;
  ++out.exp_[static_cast<std::size_t>(var - 1)];
  return out;
}

namespace {

template <class Op>
Monomial combine(const Monomial& a, const Monomial& b, Op op) {
  const std::size_t n = std::max(a.exponents().size(), b.exponents().size());
  std::vector<int> e(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = op(a.exponent(static_cast<int>(i) + 1), b.exponent(static_cast<int>(i) + 1));
  }
  return Monomial(std::move(e));
}

}  // namespace

Monomial lcm(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](int x, int y) { return std::max(x, y); });
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](int x, int y) { return std::min(x, y); });
}

Monomial colon(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](int x, int y) { return x - std::min(x, y); });
}

bool monomial_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(), a.exponents().begin(),
                                      a.exponents().end());
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (int i = 1; i <= m.nvars(); ++i) {
    const int a = m.exponent(i);
    if (a == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (a > 1) out += '^' + std::to_string(a);
  }
  return out.empty() ? "1" : out;
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> generators) : nvars_(nvars) {
  for (const Monomial& g : generators) {
    if (g.nvars() != nvars) {
      throw Error(ErrorCode::kInvalidArgument, "generator " + to_string(g) + " has " + std::to_string(g.nvars()) +
                                                   " variables, expected " + std::to_string(nvars));
    }
  }
  std::sort(generators.begin(), generators.end(), monomial_less);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // Sorted by degree, so a divisor always precedes its multiples.
  for (const Monomial& g : generators) {
    const bool redundant =
        std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(g);
  }
}

bool MonomialIdeal::is_square_free() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_square_free(); });
}

std::optional<int> MonomialIdeal::generated_degree() const {
  if (gens_.empty()) return std::nullopt;
  const int d = gens_.front().degree();
  for (const Monomial& g : gens_) {
    if (g.degree() != d) return std::nullopt;
  }
  return d;
}

int MonomialIdeal::min_degree() const { return gens_.empty() ? 0 : gens_.front().degree(); }

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal ideal_of(int nvars, std::span<const VertexSet> supports) {
  std::vector<Monomial> gens;
  gens.reserve(supports.size());
  for (VertexSet s : supports) gens.push_back(Monomial::square_free(nvars, s));
  return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal circuit_ideal(const Clutter& c) {
  const Clutter comp = complement(c);
  return ideal_of(c.n(), comp.circuits());
}

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const Monomial& f : a.generators()) {
    for (const Monomial& g : b.generators()) gens.push_back(lcm(f, g));
  }
  return MonomialIdeal(std::max(a.nvars(), b.nvars()), std::move(gens));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(std::max(a.nvars(), b.nvars()), std::move(gens));
}

MonomialIdeal colon_ideal(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) gens.push_back(colon(g, m));
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

Polarization polarize(const MonomialIdeal& ideal) {
  Polarization out;
  std::vector<int> first(static_cast<std::size_t>(ideal.nvars()), 0);
  for (int i = 1; i <= ideal.nvars(); ++i) {
    int top = 0;
    for (const Monomial& g : ideal.generators()) top = std::max(top, g.exponent(i));
    first[static_cast<std::size_t>(i - 1)] = static_cast<int>(out.origin.size());
    for (int p = 1; p <= top; ++p) out.origin.emplace_back(i, p);
  }
  const int total = static_cast<int>(out.origin.size());
  if (total > kMaxVertex) {
    throw Error(ErrorCode::kInvalidArgument, "polarization needs " + std::to_string(total) + " variables");
  }
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) {
    std::vector<int> e(static_cast<std::size_t>(total), 0);
    for (int i = 1; i <= ideal.nvars(); ++i) {
      for (int p = 0; p < g.exponent(i); ++p) e[static_cast<std::size_t>(first[static_cast<std::size_t>(i - 1)] + p)] = 1;
    }
    gens.emplace_back(std::move(e));
  }
  out.ideal = MonomialIdeal(total, std::move(gens));
  return out;
}

}  // namespace chordal
