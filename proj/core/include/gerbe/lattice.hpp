#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gerbe/linalg.hpp"
#include "gerbe/smith.hpp"

namespace gerbe {

/// Full-rank lattice in a rational subspace, given by an independent basis.
class Lattice {
 public:
  Lattice() = default;
  /// Throws std::invalid_argument when the basis is dependent.
  Lattice(std::vector<RationalVector> basis, std::size_t ambient_dim);
  /// Z-span of an arbitrary generating set, reduced to a basis.
  static Lattice generated_by(const std::vector<RationalVector>& gens,
                              std::size_t ambient_dim);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<RationalVector>& basis() const { return basis_; }

  /// Integer coordinates of v in the basis, if v lies in the lattice.
  std::optional<IntVector> coordinates(const RationalVector& v) const;
  bool contains(const RationalVector& v) const { return coordinates(v).has_value(); }

  Lattice intersect(const Lattice& other) const;

 private:
  std::vector<RationalVector> basis_;
  std::size_t dim_ = 0;
  Integer scale_ = 1;  // clears all basis denominators
  std::shared_ptr<const SmithDecomposition> snf_;
};

bool in_lattice(const RationalVector& v, const Lattice& l);

}  // namespace gerbe
