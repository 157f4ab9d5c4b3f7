#include "gerbe/linalg.hpp"

#include <sstream>
#include <utility>

namespace gerbe {

RationalVector RationalVector::unit(std::size_t i, std::size_t n) {
  RationalVector v(n);
  v[i] = 1;
  return v;
}

bool RationalVector::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

RationalVector& RationalVector::operator+=(const RationalVector& o) {
  if (o.size() != size()) throw DimensionError("vector dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
  if (o.size() != size()) throw DimensionError("vector dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

std::string RationalVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i];
  os << ')';
  return os.str();
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(
    const std::vector<RationalVector>& cols) {
  const std::size_t n = cols.empty() ? 0 : cols.front().size();
  RationalMatrix m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != n) throw DimensionError("ragged column list");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RationalVector RationalMatrix::column(std::size_t j) const {
  RationalVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector dimension mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) out[i] += a * v[j];
    }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

namespace {

// Gauss-Jordan on [A | b]; returns pivot columns.
std::vector<std::size_t> eliminate(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = Rational(1) / m(row, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<RationalVector> solve_rational(const RationalMatrix& a,
                                             const RationalVector& b) {
  if (b.size() != a.rows()) throw DimensionError("solve: rhs dimension mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto piv = eliminate(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  if (piv.size() != a.cols()) return std::nullopt;
  RationalVector x(a.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
  return x;
}

std::size_t rational_rank(const RationalMatrix& a) {
  RationalMatrix m = a;
  return eliminate(m).size();
}

IntegerMatrix::IntegerMatrix(
    std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged integer matrix literal");
    for (long x : r) a_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntegerMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector dimension mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

Integer determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace gerbe
