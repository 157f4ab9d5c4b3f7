#include "gerbe/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace gerbe {
namespace {

Integer common_denominator(const std::vector<RationalVector>& vs) {
  Integer l = 1;
  for (const auto& v : vs)
    for (const auto& x : v.coords()) l = lcm(l, x.denominator());
  return l;
}

IntVector scaled(const RationalVector& v, const Integer& s) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational x = v[i] * Rational(s);
    if (!x.is_integer()) throw std::logic_error("scaled: denominator not cleared");
    out[i] = x.numerator();
  }
  return out;
}

// Integer row echelon form of the Z-span of rows; returns the nonzero rows.
std::vector<IntVector> integer_echelon(std::vector<IntVector> pool, std::size_t n) {
  std::vector<IntVector> out;
  for (std::size_t c = 0; c < n && !pool.empty(); ++c) {
    std::vector<IntVector> rest;
    std::optional<IntVector> acc;
    for (auto& p : pool) {
      if (sgn(p[c]) == 0) {
        rest.push_back(std::move(p));
        continue;
      }
      if (!acc) {
        acc = std::move(p);
        continue;
      }
      const auto eg = extended_gcd((*acc)[c], p[c]);
      const Integer u = -p[c] / eg.g, w = (*acc)[c] / eg.g;
      IntVector top(n), bottom(n);
      for (std::size_t k = c; k < n; ++k) {
        top[k] = eg.s * (*acc)[k] + eg.t * p[k];
        bottom[k] = u * (*acc)[k] + w * p[k];
      }
      acc = std::move(top);
      bool nz = false;
      for (const auto& x : bottom) nz = nz || sgn(x) != 0;
      if (nz) rest.push_back(std::move(bottom));
    }
    if (acc) out.push_back(std::move(*acc));
    pool = std::move(rest);
  }
  return out;
}

}  // namespace

Lattice::Lattice(std::vector<RationalVector> basis, std::size_t ambient_dim)
    : basis_(std::move(basis)), dim_(ambient_dim) {
  for (const auto& b : basis_)
    if (b.size() != dim_) throw DimensionError("Lattice: basis vector dimension");
  if (!basis_.empty() &&
      rational_rank(RationalMatrix::from_columns(basis_)) != basis_.size())
    throw std::invalid_argument("Lattice: basis vectors are linearly dependent");
  scale_ = common_denominator(basis_);
  IntegerMatrix b(dim_, basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    const auto col = scaled(basis_[j], scale_);
    for (std::size_t i = 0; i < dim_; ++i) b(i, j) = col[i];
  }
  snf_ = std::make_shared<const SmithDecomposition>(smith_normal_form(b));
}

Lattice Lattice::generated_by(const std::vector<RationalVector>& gens,
                              std::size_t ambient_dim) {
  for (const auto& g : gens)
    if (g.size() != ambient_dim) throw DimensionError("Lattice: generator dimension");
  const Integer s = common_denominator(gens);
  std::vector<IntVector> rows;
  for (const auto& g : gens) rows.push_back(scaled(g, s));
  std::vector<RationalVector> basis;
  for (const auto& row : integer_echelon(std::move(rows), ambient_dim)) {
    RationalVector v(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) v[i] = Rational(row[i], s);
    basis.push_back(std::move(v));
  }
  return Lattice(std::move(basis), ambient_dim);
}

std::optional<IntVector> Lattice::coordinates(const RationalVector& v) const {
  if (v.size() != dim_) throw DimensionError("Lattice: vector dimension mismatch");
  IntVector w(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    const Rational x = v[i] * Rational(scale_);
    if (!x.is_integer()) return std::nullopt;
    w[i] = x.numerator();
  }
  if (!snf_) return v.is_zero() ? std::optional<IntVector>(IntVector{}) : std::nullopt;
  const IntVector uw = snf_->apply_left(std::move(w));
  IntVector y(rank());
  for (std::size_t i = 0; i < uw.size(); ++i) {
    if (i < snf_->rank) {
      if (!mpz_divisible_p(uw[i].get_mpz_t(), snf_->d(i).get_mpz_t()))
        return std::nullopt;
      y[i] = uw[i] / snf_->d(i);
    } else if (sgn(uw[i]) != 0) {
      return std::nullopt;
    }
  }
  return snf_->right.apply(y);
}

Lattice Lattice::intersect(const Lattice& other) const {
  if (other.dim_ != dim_) throw DimensionError("Lattice::intersect: dimension mismatch");
  const std::size_t r1 = rank(), r2 = other.rank();
  std::vector<RationalVector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  const Integer s = common_denominator(all);
  IntegerMatrix m(dim_, r1 + r2);
  for (std::size_t j = 0; j < r1 + r2; ++j) {
    auto col = scaled(all[j], s);
    if (j >= r1)
      for (auto& x : col) x = -x;
    for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
  }
  const auto snf = smith_normal_form(m);
  std::vector<RationalVector> gens;
  for (std::size_t k = snf.rank; k < r1 + r2; ++k) {
    RationalVector g(dim_);
    for (std::size_t j = 0; j < r1; ++j)
      if (sgn(snf.right(j, k)) != 0) g += Rational(snf.right(j, k)) * basis_[j];
    gens.push_back(std::move(g));
  }
  return generated_by(gens, dim_);
}

bool in_lattice(const RationalVector& v, const Lattice& l) { return l.contains(v); }

}  // namespace gerbe
