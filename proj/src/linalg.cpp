#include "linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>

namespace chordal::detail {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1u) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

template <class Int, class Mul, class Sub>
std::size_t bareiss_rank(std::vector<std::vector<Int>> a, Mul mul, Sub sub) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        // Exact: every intermediate entry is a minor of the input.
        a[i][j] = sub(mul(a[r][c], a[i][j]), mul(a[i][c], a[r][j])) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank_gf2(const IntMatrix& m) {
  const std::size_t words = (m.cols() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if ((m(r, c) & 1) != 0) rows[r][c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t p = rank;
    while (p < rows.size() && (rows[p][w] & bit) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if ((rows[i][w] & bit) != 0) {
        for (std::size_t k = w; k < words; ++k) rows[i][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  const std::int64_t pp = p;
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      a[r][c] = static_cast<std::uint64_t>(((m(r, c) % pp) + pp) % pp);
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t inv = pow_mod(a[rank][c], p - 2, p);
    for (std::size_t j = c; j < m.cols(); ++j) a[rank][j] = a[rank][j] * inv % p;
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      const std::uint64_t f = a[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < m.cols(); ++j) {
        a[i][j] = (a[i][j] + (p - f) * a[rank][j]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const IntMatrix& m) {
  try {
    std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
    }
    return bareiss_rank<std::int64_t>(std::move(a), checked_mul, checked_sub);
  } catch (const Overflow&) {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> a(m.rows(), std::vector<cpp_int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
    }
    return bareiss_rank<cpp_int>(
        std::move(a), [](const cpp_int& x, const cpp_int& y) -> cpp_int { return x * y; },
        [](const cpp_int& x, const cpp_int& y) -> cpp_int { return x - y; });
  }
}

std::size_t rank(const IntMatrix& m, FieldSpec field) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  switch (field.characteristic()) {
    case 0: return rank_rational(m);
    case 2: return rank_gf2(m);
    default: return rank_mod_p(m, static_cast<std::uint32_t>(field.characteristic()));
  }
}

}  // namespace chordal::detail
