#pragma once

#include <cstddef>
#include <vector>

#include "gerbe/linalg.hpp"

namespace gerbe {

/// Elementary unimodular row operation: rows (i, j) <- [[a, b], [c, d]] (i, j).
/// When i == j only the scalar a (a unit) applies.
struct RowOp {
  std::size_t i, j;
  Integer a, b, c, d;
};

/// D = U A V with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
/// U is kept as a log of row operations; left() materializes it.
struct SmithDecomposition {
  IntegerMatrix diagonal;
  IntegerMatrix right;
  std::vector<RowOp> row_ops;
  std::size_t rank = 0;

  std::size_t rows() const { return diagonal.rows(); }
  std::size_t cols() const { return diagonal.cols(); }
  const Integer& d(std::size_t i) const { return diagonal(i, i); }

  IntegerMatrix left() const;
  /// U b without forming U.
  std::vector<Integer> apply_left(std::vector<Integer> b) const;
  /// Nonzero diagonal entries.
  std::vector<Integer> invariants() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

}  // namespace gerbe
