#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gerbe/center.hpp"
#include "gerbe/modular.hpp"

namespace gerbe {

/// Element of Q/Z, stored as its representative in [0, 1).
class Phase {
 public:
  Phase() = default;
  Phase(const Rational& x) : v_(x.mod_one()) {}  // NOLINT(google-explicit-constructor)

  const Rational& value() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }
  std::string str() const { return v_.str(); }

  Phase& operator+=(const Phase& o) { return *this = Phase(v_ + o.v_); }
  Phase& operator-=(const Phase& o) { return *this = Phase(v_ - o.v_); }
  friend Phase operator+(Phase a, const Phase& b) { return a += b; }
  friend Phase operator-(Phase a, const Phase& b) { return a -= b; }
  friend Phase operator-(const Phase& a) { return Phase(-a.v_); }
  friend Phase operator*(long k, const Phase& a) { return Phase(Rational(k) * a.v_); }
  friend bool operator==(const Phase&, const Phase&) = default;
  friend auto operator<=>(const Phase& a, const Phase& b) { return a.v_ <=> b.v_; }

 private:
  Rational v_;
};

/// Normalized Q/Z-valued n-cochain on a group of the given order.
class PhaseCochain {
 public:
  PhaseCochain() = default;
  PhaseCochain(std::size_t degree, std::size_t order);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return order_; }
  std::size_t size() const { return values_.size(); }

  const Phase& at(const std::vector<std::size_t>& args) const { return values_[flat(args)]; }
  Phase& at(const std::vector<std::size_t>& args) { return values_[flat(args)]; }
  const Phase& operator()(std::size_t a, std::size_t b) const { return values_[a * order_ + b]; }
  const Phase& operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return values_[(a * order_ + b) * order_ + c];
  }
  const std::vector<Phase>& values() const { return values_; }
  std::vector<Phase>& values() { return values_; }

  bool is_zero() const;
  /// Zero whenever an argument is the identity (index 0).
  bool is_normalized() const;
  /// Least common denominator of all entries.
  Integer denominator() const;

  friend bool operator==(const PhaseCochain&, const PhaseCochain&) = default;

 private:
  std::size_t flat(const std::vector<std::size_t>& args) const;
  std::size_t degree_ = 0, order_ = 0;
  std::vector<Phase> values_;
};

/// Argument tuples of a degree-n normalized cochain: all entries non-identity,
/// in lexicographic order.
std::vector<std::vector<std::size_t>> nonidentity_tuples(std::size_t order, std::size_t degree);

// --- Characters on the torus -------------------------------------------------

/// tr(tau_i, p) mod 1.
Phase chi_vertex(const RootSystem& rs, std::size_t i, const RationalVector& p);
/// tr(tau_j - tau_i, t) mod 1.
Phase chi_pair(const RootSystem& rs, std::size_t i, std::size_t j, const RationalVector& t);

/// Invariance of chi_i and chi_ij under z for lattice generators.
bool lemma1_check(const RootSystem& rs, const CenterData& data, std::size_t z, std::size_t i,
                  std::size_t j);

/// Runs lemma1_check for every z, i, j with lattices computed once.
struct Lemma1Report {
  bool ok = true;
  std::size_t checks = 0;
  std::string failure;
};
Lemma1Report lemma1_sweep(const RootSystem& rs, const CenterData& data);

// --- Obstruction cocycle -----------------------------------------------------

struct ObstructionForms {
  PhaseCochain first;   // written through chi and delta e
  PhaseCochain second;  // written through e only
};
ObstructionForms u_obstruction_forms(const RootSystem& rs, const CenterData& data,
                                     const ETable& e, long level);
/// Second form; throws std::logic_error if the two forms disagree.
PhaseCochain u_obstruction(const RootSystem& rs, const CenterData& data, const ETable& e,
                           long level);
inline PhaseCochain u_obstruction(const RootSystem& rs, const CenterData& data, long level) {
  return u_obstruction(rs, data, data.etable, level);
}

/// Alternating-sum coboundary with trivial action; degree 1, 2 or 3 input.
PhaseCochain coboundary_phase(const CenterGroup& z, const PhaseCochain& c);
bool is_cocycle(const CenterGroup& z, const PhaseCochain& u3);

/// Integer matrix of delta on normalized (degree)-cochains: rows index
/// nonidentity (degree+1)-tuples, columns nonidentity degree-tuples.
IntegerMatrix coboundary_matrix(const CenterGroup& z, std::size_t degree);

struct CoboundarySolution {
  Integer modulus;                // M; u takes values in (1/M)Z/Z
  IntVector particular;           // lexicographically least solution mod M
  std::vector<IntVector> kernel;  // 2-cocycles mod M
  PhaseCochain u;                 // particular as a phase table
};

/// Solves delta u = U, reusing one Smith decomposition per group.
class CoboundarySolver {
 public:
  explicit CoboundarySolver(const CenterGroup& z);
  const CenterGroup& group() const { return z_; }
  /// Modulus |Z| * lcm(den U, |Z|).
  Integer modulus_for(const PhaseCochain& u3) const;
  /// Throws std::invalid_argument if U is not a cocycle.
  std::optional<CoboundarySolution> solve(const PhaseCochain& u3) const;
  std::optional<CoboundarySolution> solve(const PhaseCochain& u3, const Integer& modulus) const;

  const SmithDecomposition& smith() const { return *snf_; }

 private:
  CenterGroup z_;
  IntegerMatrix delta2_;
  std::shared_ptr<const SmithDecomposition> snf_;
};

std::optional<CoboundarySolution> solve_coboundary(const CenterGroup& z, const PhaseCochain& u3);

struct SolutionClasses {
  std::size_t count = 0;
  std::vector<PhaseCochain> representatives;  // lexicographically ordered
  Integer modulus;                              // saturated modulus M * |Z|
};

/// Solutions of delta u = U modulo coboundaries; throws std::runtime_error
/// when no solution exists or a second saturation changes the count.
SolutionClasses solution_classes(const RootSystem& rs, const CenterData& data, long level);
SolutionClasses solution_classes(const CoboundarySolver& solver, const PhaseCochain& u3);

struct LevelReport {
  Family family{};
  int rank = 0;
  std::string subgroup;
  long k_min = 0;
  std::vector<bool> trivial_at;  // index k-1
  PhaseCochain u;
  std::size_t class_count = 0;
  std::vector<PhaseCochain> representatives;
};

inline constexpr long kLevelCap = 12;

/// Least k with delta u = U_k solvable; throws std::runtime_error past kLevelCap.
LevelReport minimal_level(const RootSystem& rs, const CenterData& data);
LevelReport minimal_level(const RootSystem& rs, const CenterData& data, const ETable& e);

// --- Vertex-indexed solution families ---------------------------------------

/// u^{ijk}_{z,z'} indexed by three nodes and two group elements.
class VertexFamily {
 public:
  VertexFamily(std::size_t nodes, std::size_t order)
      : nodes_(nodes), order_(order), v_(nodes * nodes * nodes * order * order) {}
  std::size_t nodes() const { return nodes_; }
  std::size_t order() const { return order_; }
  const Phase& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t a,
                          std::size_t b) const {
    return v_[index(i, j, k, a, b)];
  }
  Phase& at(std::size_t i, std::size_t j, std::size_t k, std::size_t a, std::size_t b) {
    return v_[index(i, j, k, a, b)];
  }

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k, std::size_t a,
                    std::size_t b) const {
    return (((i * nodes_ + j) * nodes_ + k) * order_ + a) * order_ + b;
  }
  std::size_t nodes_, order_;
  std::vector<Phase> v_;
};

/// u^{ijk}_{z,z'} = u_{z,z'} - k tr(tau_{zz'0} - tau_k, e_{z,z'}); requires delta u = U.
VertexFamily lemma3_extend(const RootSystem& rs, const CenterData& data, long level,
                           const PhaseCochain& u);

struct RtcCounterexample {
  std::size_t i, j, k, l, a, b, c;
  Phase lhs, rhs;
};
struct RtcResult {
  bool ok = true;
  std::size_t checks = 0;
  std::optional<RtcCounterexample> counterexample;
};
RtcResult verify_rtc(const RootSystem& rs, const CenterData& data, long level,
                     const VertexFamily& family);

}  // namespace gerbe
