#include "gerbe/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace gerbe {
namespace {

bool is_shear(const RowOp& op) {
  return op.i != op.j && op.a == 1 && op.c == 0 && op.d == 1;
}

// Applies op to the contiguous rows ri, rj of length len from column `from`.
void apply_row_op(Integer* ri, Integer* rj, const RowOp& op, std::size_t len,
                  std::size_t from) {
  if (op.i == op.j) {
    for (std::size_t k = from; k < len; ++k) ri[k] *= op.a;
    return;
  }
  if (is_shear(op)) {
    for (std::size_t k = from; k < len; ++k)
      if (sgn(rj[k]) != 0) mpz_addmul(ri[k].get_mpz_t(), op.b.get_mpz_t(), rj[k].get_mpz_t());
    return;
  }
  Integer x, y;
  for (std::size_t k = from; k < len; ++k) {
    if (sgn(ri[k]) == 0 && sgn(rj[k]) == 0) continue;
    x = op.a * ri[k] + op.b * rj[k];
    y = op.c * ri[k] + op.d * rj[k];
    ri[k] = x;
    rj[k] = y;
  }
}

class Reducer {
 public:
  explicit Reducer(const IntegerMatrix& a)
      : m_(a), v_(IntegerMatrix::identity(a.cols())) {}

  SmithDecomposition run() {
    const std::size_t n = std::min(m_.rows(), m_.cols());
    std::size_t t = 0;
    for (; t < n; ++t) {
      if (!bring_pivot(t)) break;
      for (;;) {
        clear_cross(t);
        auto bad = find_nondivisible(t);
        if (!bad) break;
        row_op({t, *bad, 1, 1, 0, 1}, t);
      }
      if (sgn(m_(t, t)) < 0) row_op({t, t, -1, 0, 0, 1}, t);
    }
    SmithDecomposition out;
    out.rank = t;
    out.diagonal = std::move(m_);
    out.right = std::move(v_);
    out.row_ops = std::move(ops_);
    return out;
  }

 private:
  // Row ops here are encoded as new_i = a r_i + b r_j, new_j = c r_i + d r_j.
  void row_op(RowOp op, std::size_t from) {
    apply_row_op(&m_(op.i, 0), &m_(op.j, 0), op, m_.cols(), from);
    ops_.push_back(std::move(op));
  }

  // Column op: new col_i = a c_i + b c_j, new col_j = c c_i + d c_j.
  void col_op(std::size_t i, std::size_t j, const Integer& a, const Integer& b,
              const Integer& c, const Integer& d, std::size_t from) {
    auto combine = [&](IntegerMatrix& m, std::size_t start) {
      Integer x, y;
      for (std::size_t k = start; k < m.rows(); ++k) {
        if (sgn(m(k, i)) == 0 && sgn(m(k, j)) == 0) continue;
        x = a * m(k, i) + b * m(k, j);
        y = c * m(k, i) + d * m(k, j);
        m(k, i) = x;
        m(k, j) = y;
      }
    };
    combine(m_, from);
    combine(v_, 0);
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m_.rows(); ++k) std::swap(m_(k, i), m_(k, j));
    for (std::size_t k = 0; k < v_.rows(); ++k) std::swap(v_(k, i), v_(k, j));
  }

  bool bring_pivot(std::size_t t) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t i = t; i < m_.rows(); ++i)
      for (std::size_t j = t; j < m_.cols(); ++j) {
        if (sgn(m_(i, j)) == 0) continue;
        if (!found || mpz_cmpabs(m_(i, j).get_mpz_t(), m_(bi, bj).get_mpz_t()) < 0) {
          bi = i, bj = j, found = true;
        }
      }
    if (!found) return false;
    if (bi != t) row_op({t, bi, 0, 1, 1, 0}, t);
    swap_cols(t, bj);
    return true;
  }

  void clear_cross(std::size_t t) {
    for (;;) {
      for (std::size_t i = t + 1; i < m_.rows(); ++i) {
        if (sgn(m_(i, t)) == 0) continue;
        const Integer& p = m_(t, t);
        if (mpz_divisible_p(m_(i, t).get_mpz_t(), p.get_mpz_t())) {
          Integer q = m_(i, t) / p;
          row_op({i, t, 1, -q, 0, 1}, t);
        } else {
          const auto eg = extended_gcd(p, m_(i, t));
          Integer c = -m_(i, t) / eg.g;
          Integer d = p / eg.g;
          row_op({t, i, eg.s, eg.t, c, d}, t);
        }
      }
      bool row_clear = true;
      for (std::size_t j = t + 1; j < m_.cols(); ++j) {
        if (sgn(m_(t, j)) == 0) continue;
        const Integer& p = m_(t, t);
        if (mpz_divisible_p(m_(t, j).get_mpz_t(), p.get_mpz_t())) {
          Integer q = m_(t, j) / p;
          col_op(j, t, 1, -q, 0, 1, t);
        } else {
          const auto eg = extended_gcd(p, m_(t, j));
          Integer c = -m_(t, j) / eg.g;
          Integer d = p / eg.g;
          col_op(t, j, eg.s, eg.t, c, d, t);
          row_clear = false;
        }
      }
      if (row_clear) return;
      bool col_clear = true;
      for (std::size_t i = t + 1; i < m_.rows(); ++i)
        if (sgn(m_(i, t)) != 0) col_clear = false;
      if (col_clear) return;
    }
  }

  std::optional<std::size_t> find_nondivisible(std::size_t t) {
    for (std::size_t i = t + 1; i < m_.rows(); ++i)
      for (std::size_t j = t + 1; j < m_.cols(); ++j)
        if (sgn(m_(i, j)) != 0 &&
            !mpz_divisible_p(m_(i, j).get_mpz_t(), m_(t, t).get_mpz_t()))
          return i;
    return std::nullopt;
  }

  IntegerMatrix m_, v_;
  std::vector<RowOp> ops_;
};

}  // namespace

IntegerMatrix SmithDecomposition::left() const {
  IntegerMatrix u = IntegerMatrix::identity(rows());
  for (const auto& op : row_ops)
    apply_row_op(&u(op.i, 0), &u(op.j, 0), op, rows(), 0);
  return u;
}

std::vector<Integer> SmithDecomposition::apply_left(std::vector<Integer> b) const {
  if (b.size() != rows()) throw DimensionError("apply_left: dimension mismatch");
  for (const auto& op : row_ops) apply_row_op(&b[op.i], &b[op.j], op, 1, 0);
  return b;
}

std::vector<Integer> SmithDecomposition::invariants() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i));
  return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  return Reducer(a).run();
}

}  // namespace gerbe
