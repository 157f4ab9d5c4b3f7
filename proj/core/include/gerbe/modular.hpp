#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gerbe/smith.hpp"

namespace gerbe {

struct ModularSolution {
  IntVector particular;         // entries in [0, M)
  std::vector<IntVector> kernel;  // generators of {x : A x = 0 mod M}
};

/// Solves A x = b (mod M) via the Smith form of A. nullopt when unsolvable.
std::optional<ModularSolution> solve_linear_mod(const IntegerMatrix& a,
                                                const IntVector& b,
                                                const Integer& m);
std::optional<ModularSolution> solve_linear_mod(const SmithDecomposition& snf,
                                                const IntVector& b,
                                                const Integer& m);

/// Subgroup of (Z/M)^n held in Howell form: rows with strictly increasing
/// pivot columns, pivots dividing M, and every element whose leading entries
/// vanish lies in the span of the later rows.
class ModularSubgroup {
 public:
  ModularSubgroup(std::size_t n, Integer m, const std::vector<IntVector>& gens);

  std::size_t dimension() const { return n_; }
  const Integer& modulus() const { return m_; }
  const std::vector<IntVector>& basis() const { return rows_; }

  Integer order() const;
  bool contains(const IntVector& v) const;
  /// Canonical representative of v + S: the lexicographically least element
  /// with entries in [0, M).
  IntVector reduce(IntVector v) const;

 private:
  std::size_t n_;
  Integer m_;
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivot_;
};

}  // namespace gerbe
