#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "gerbe/rational.hpp"

namespace gerbe {

using IntVector = std::vector<Integer>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t n) : c_(n) {}
  RationalVector(std::initializer_list<Rational> xs) : c_(xs) {}
  explicit RationalVector(std::vector<Rational> xs) : c_(std::move(xs)) {}

  static RationalVector zero(std::size_t n) { return RationalVector(n); }
  static RationalVector unit(std::size_t i, std::size_t n);

  std::size_t size() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;

  RationalVector& operator+=(const RationalVector& o);
  RationalVector& operator-=(const RationalVector& o);
  RationalVector& operator*=(const Rational& s);

  friend RationalVector operator+(RationalVector a, const RationalVector& b) {
    return a += b;
  }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) {
    return a -= b;
  }
  friend RationalVector operator-(RationalVector a) { return a *= Rational(-1); }
  friend RationalVector operator*(const Rational& s, RationalVector a) {
    return a *= s;
  }

  friend bool operator==(const RationalVector&, const RationalVector&) = default;
  friend auto operator<=>(const RationalVector& a, const RationalVector& b) {
    return a.c_ <=> b.c_;
  }

  /// "(a, b, c)" with each coordinate in p/q form.
  std::string str() const;

 private:
  std::vector<Rational> c_;
};

/// Dense rational matrix, row major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  /// Matrix whose j-th column is cols[j].
  static RationalMatrix from_columns(const std::vector<RationalVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  Rational& operator()(std::size_t i, std::size_t j) {
    return a_[i * cols_ + j];
  }

  RationalVector column(std::size_t j) const;
  RationalVector apply(const RationalVector& v) const;
  RationalMatrix transpose() const;

  friend RationalMatrix operator*(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Unique x with A x = b when A has full column rank and b is in the column
/// space; nullopt otherwise.
std::optional<RationalVector> solve_rational(const RationalMatrix& a,
                                             const RationalVector& b);

std::size_t rational_rank(const RationalMatrix& a);

/// Dense integer matrix, row major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  IntVector apply(const IntVector& v) const;
  IntegerMatrix transpose() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntegerMatrix& a);

}  // namespace gerbe
