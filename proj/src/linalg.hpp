#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chordal/field.hpp"

namespace chordal::detail {

/// Dense row-major integer matrix; boundary maps only ever hold small entries.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

/// Exact rank over the field: bit-packed elimination for GF(2), modular
/// elimination for GF(p), fraction-free (Bareiss) elimination over the
/// integers for characteristic 0.
std::size_t rank(const IntMatrix& m, FieldSpec field);

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p);
std::size_t rank_gf2(const IntMatrix& m);
std::size_t rank_rational(const IntMatrix& m);

}  // namespace chordal::detail
