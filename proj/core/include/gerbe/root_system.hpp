#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gerbe/lattice.hpp"
#include "gerbe/linalg.hpp"

namespace gerbe {

enum class Family { A, B, C, D, E6, E7 };

std::string to_string(Family f);
/// Accepts "A".."D", "E6", "E7" (case-insensitive); throws std::invalid_argument.
Family parse_family(std::string_view s);

class RootSystemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Root datum in explicit coordinates with a diagonal invariant form.
///
/// E6 lives in 7-space with the last coordinate rescaled by sqrt(2), so the
/// Gram entry on that axis is 1/2. A_r lives in the zero-sum hyperplane of
/// (r+1)-space.
class RootSystem {
 public:
  static RootSystem build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::size_t ambient_dim() const { return gram_.size(); }
  const std::vector<Rational>& gram() const { return gram_; }
  /// Short name, e.g. "D8", "E6".
  std::string name() const;

  Rational form(const RationalVector& x, const RationalVector& y) const;
  /// Throws DimensionError unless v is in the ambient space (zero-sum for A).
  void check_vector(const RationalVector& v) const;

  // Indices below are 0-based: simple_root(0) is alpha_1.
  const std::vector<RationalVector>& simple_roots() const { return simple_; }
  const std::vector<RationalVector>& coroots() const { return coroots_; }
  const std::vector<RationalVector>& fundamental_weights() const { return weights_; }
  const std::vector<RationalVector>& fundamental_coweights() const { return coweights_; }

  // Indexed by node 0..r; entry 0 is 1.
  const std::vector<int>& marks() const { return marks_; }
  const std::vector<int>& comarks() const { return comarks_; }
  const RationalVector& highest_root() const { return highest_; }
  int dual_coxeter() const;
  /// tau_0 = 0, tau_i = coweight_i / k_i.
  const std::vector<RationalVector>& alcove_vertices() const { return tau_; }
  const RationalVector& tau(std::size_t i) const { return tau_.at(i); }
  std::size_t node_count() const { return tau_.size(); }

  /// Sorted list of all roots.
  const std::vector<RationalVector>& roots() const { return roots_; }
  bool is_root(const RationalVector& v) const;
  /// a_ij = tr(alpha_i, coroot_j).
  IntegerMatrix cartan_matrix() const;

  const Lattice& coroot_lattice() const { return coroot_lattice_; }
  const Lattice& coweight_lattice() const { return coweight_lattice_; }

  RationalVector coroot_of(const RationalVector& root) const;
  RationalVector reflect(const RationalVector& root, const RationalVector& v) const;

 private:
  RootSystem() = default;
  void derive();

  Family family_{};
  int rank_ = 0;
  std::vector<Rational> gram_;
  std::vector<RationalVector> simple_, coroots_, weights_, coweights_, tau_, roots_;
  std::vector<int> marks_, comarks_;
  RationalVector highest_;
  Lattice coroot_lattice_, coweight_lattice_;
};

inline RootSystem build_root_system(Family f, int rank) {
  return RootSystem::build(f, rank);
}

Rational bilinear_form(const RationalVector& x, const RationalVector& y,
                       const RootSystem& rs);

std::vector<RationalVector> all_roots(const RootSystem& rs);

struct HighestRootData {
  RationalVector phi;
  std::vector<int> marks;    // k_0..k_r
  std::vector<int> comarks;  // k_0^v..k_r^v
};
HighestRootData highest_root(const RootSystem& rs);

/// Throws RootSystemError when `root` is not a root of rs.
RationalVector weyl_reflection(const RationalVector& root, const RationalVector& v,
                               const RootSystem& rs);

/// P^v for i = 0, otherwise the span of k_j(tau_j - tau_i) (j != i, j >= 1)
/// and -tau_i.
Lattice stabilizer_coweight_lattice(const RootSystem& rs, std::size_t i);

/// tr(alpha_i, v) >= 0 for all i and tr(phi, v) <= 1.
bool in_alcove(const RootSystem& rs, const RationalVector& v);

}  // namespace gerbe
