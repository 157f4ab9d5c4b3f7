#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gerbe/root_system.hpp"

namespace gerbe {

/// Malformed textual input; `position` is the 0-based offending offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// z = exp(-2 pi i theta); theta = 0 for the identity.
struct CenterElement {
  std::string label;
  RationalVector theta;
};

/// The center of the simply connected group or one of its subgroups.
/// Element 0 is always the identity.
class CenterGroup {
 public:
  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<CenterElement>& elements() const { return elements_; }
  const CenterElement& element(std::size_t i) const { return elements_.at(i); }

  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inv_[a]; }
  /// Throws std::invalid_argument for unknown labels.
  std::size_t index_of(std::string_view element_label) const;

  /// Position of element i inside the full center.
  std::size_t full_index(std::size_t i) const { return full_index_[i]; }
  std::size_t full_order() const { return full_order_; }
  bool is_full() const { return order() == full_order_; }
  bool is_cyclic() const;

  /// Canonical subgroup label ("Z2xZ2", "cyclic:3", "z1", "trivial", ...).
  const std::string& label() const { return label_; }

 private:
  friend CenterGroup center_of(const RootSystem& rs);
  friend CenterGroup make_subgroup(const CenterGroup& full,
                                   const std::vector<std::size_t>& members);

  Family family_{};
  int rank_ = 0;
  std::vector<CenterElement> elements_;
  std::vector<std::size_t> mul_, inv_, full_index_;
  std::size_t full_order_ = 0;
  std::string label_;
};

CenterGroup center_of(const RootSystem& rs);
/// Subgroup with the given full-center members (must be closed).
CenterGroup make_subgroup(const CenterGroup& full, const std::vector<std::size_t>& members);
/// All subgroups ordered by (order, label).
std::vector<CenterGroup> subgroups_of(const CenterGroup& full);
/// Grammar: full | trivial | cyclic:N | Z<n> | Z2xZ2 | z1 | z2 | z1z2.
/// Throws ParseError (malformed) or std::invalid_argument (not valid here).
CenterGroup subgroup_by_label(const CenterGroup& full, std::string_view text);

/// Adjoint action of the lifts w_z and their permutations of the nodes 0..r.
class CenterAction {
 public:
  const std::vector<std::size_t>& node_perm(std::size_t z) const { return perm_.at(z); }
  std::size_t act(std::size_t z, std::size_t node) const { return perm_[z][node]; }
  const RationalMatrix& weyl_part(std::size_t z) const { return weyl_.at(z); }
  std::size_t order() const { return perm_.size(); }

 private:
  friend CenterAction action_of(const RootSystem& rs, const CenterGroup& z);
  std::vector<std::vector<std::size_t>> perm_;
  std::vector<RationalMatrix> weyl_;
};

/// Throws std::logic_error if any structural invariant fails.
CenterAction action_of(const RootSystem& rs, const CenterGroup& z);

/// e_{z,z'} table over a group of order n.
class ETable {
 public:
  ETable() = default;
  ETable(std::size_t order, std::size_t dim)
      : n_(order), e_(order * order, RationalVector::zero(dim)) {}
  std::size_t order() const { return n_; }
  const RationalVector& operator()(std::size_t a, std::size_t b) const { return e_[a * n_ + b]; }
  RationalVector& at(std::size_t a, std::size_t b) { return e_[a * n_ + b]; }
  friend bool operator==(const ETable&, const ETable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<RationalVector> e_;
};

/// Restriction of the full-center table to z.
ETable e_table(const RootSystem& rs, const CenterGroup& z);

/// (delta e)_{z,z',z''} flattened as ((a * n) + b) * n + c.
struct DeltaE {
  std::size_t order = 0;
  std::vector<RationalVector> values;
  const RationalVector& operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return values[(a * order + b) * order + c];
  }
};

class CocycleError : public std::runtime_error {
 public:
  CocycleError(const std::string& what, std::size_t a, std::size_t b, std::size_t c)
      : std::runtime_error(what), triple_{a, b, c} {}
  const std::size_t* triple() const { return triple_; }

 private:
  std::size_t triple_[3];
};

DeltaE delta_e_values(const RootSystem& rs, const CenterGroup& z,
                      const CenterAction& act, const ETable& e);
/// As delta_e_values, but throws CocycleError at the first value outside Q^v.
DeltaE delta_e(const RootSystem& rs, const CenterGroup& z, const CenterAction& act,
               const ETable& e);

/// W_z tau + tau_{z0}; throws std::invalid_argument if tau is outside the alcove.
RationalVector affine_action(const RootSystem& rs, const CenterAction& act,
                             std::size_t z, const RationalVector& tau);

/// Simple-reflection word (1-based indices, leftmost factor first) for an
/// element of the full center.
std::vector<int> reflection_word(const RootSystem& rs, const CenterGroup& full,
                                 std::size_t z);
/// Composite of the word's reflections equals W_z on t.
bool reflection_word_check(const RootSystem& rs, const CenterGroup& full,
                           const CenterAction& act, std::size_t z);
/// Shorter factorizations through non-simple roots (E6: 4 roots, E7: 3);
/// empty for other families.
std::vector<RationalVector> short_reflection_roots(const RootSystem& rs);
bool short_reflection_check(const RootSystem& rs, const CenterGroup& full,
                            const CenterAction& act);

struct CenterData {
  CenterGroup group;
  CenterAction action;
  ETable etable;
};
CenterData center_data(const RootSystem& rs, const CenterGroup& z);

}  // namespace gerbe
