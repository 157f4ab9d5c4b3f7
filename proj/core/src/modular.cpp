#include "gerbe/modular.hpp"

#include <stdexcept>
#include <utility>

namespace gerbe {
namespace {

Integer inverse_mod(const Integer& a, const Integer& m) {
  if (m == 1) return 0;
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::logic_error("inverse_mod: not a unit");
  return r;
}

void reduce_all(IntVector& v, const Integer& m) {
  for (auto& x : v) x = mod(x, m);
}

bool all_zero(const IntVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace

std::optional<ModularSolution> solve_linear_mod(const IntegerMatrix& a,
                                                const IntVector& b,
                                                const Integer& m) {
  return solve_linear_mod(smith_normal_form(a), b, m);
}

std::optional<ModularSolution> solve_linear_mod(const SmithDecomposition& snf,
                                                const IntVector& b,
                                                const Integer& m) {
  if (m < 1) throw std::invalid_argument("solve_linear_mod: modulus must be >= 1");
  if (b.size() != snf.rows())
    throw DimensionError("solve_linear_mod: rhs dimension mismatch");
  const std::size_t n = snf.cols();
  const IntVector ub = snf.apply_left(b);

  IntVector y(n);
  std::vector<IntVector> kernel_y;
  for (std::size_t i = 0; i < snf.rows(); ++i) {
    if (i < snf.rank) {
      const Integer g = gcd(snf.d(i), m);
      if (!mpz_divisible_p(ub[i].get_mpz_t(), g.get_mpz_t())) return std::nullopt;
      const Integer mg = m / g;
      y[i] = mod((ub[i] / g) * inverse_mod(mod(snf.d(i) / g, mg), mg), mg);
      if (g > 1) {
        IntVector k(n);
        k[i] = mg;
        kernel_y.push_back(std::move(k));
      }
    } else if (!mpz_divisible_p(ub[i].get_mpz_t(), m.get_mpz_t())) {
      return std::nullopt;
    }
  }
  for (std::size_t i = snf.rank; i < n; ++i) {
    IntVector k(n);
    k[i] = 1;
    kernel_y.push_back(std::move(k));
  }

  ModularSolution sol;
  sol.particular = snf.right.apply(y);
  reduce_all(sol.particular, m);
  for (const auto& k : kernel_y) {
    IntVector x = snf.right.apply(k);
    reduce_all(x, m);
    if (!all_zero(x)) sol.kernel.push_back(std::move(x));
  }
  return sol;
}

ModularSubgroup::ModularSubgroup(std::size_t n, Integer m,
                                 const std::vector<IntVector>& gens)
    : n_(n), m_(std::move(m)) {
  if (m_ < 1) throw std::invalid_argument("ModularSubgroup: modulus must be >= 1");
  std::vector<IntVector> pool;
  for (auto g : gens) {
    if (g.size() != n_) throw DimensionError("ModularSubgroup: generator dimension");
    reduce_all(g, m_);
    if (!all_zero(g)) pool.push_back(std::move(g));
  }
  for (std::size_t c = 0; c < n_ && !pool.empty(); ++c) {
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
      // 2x2 unimodular combination zeroing p[c] against acc[c].
      const auto eg = extended_gcd((*acc)[c], p[c]);
      const Integer u = -p[c] / eg.g, w = (*acc)[c] / eg.g;
      IntVector top(n_), bottom(n_);
      for (std::size_t k = c; k < n_; ++k) {
        top[k] = mod(eg.s * (*acc)[k] + eg.t * p[k], m_);
        bottom[k] = mod(u * (*acc)[k] + w * p[k], m_);
      }
      acc = std::move(top);
      if (!all_zero(bottom)) rest.push_back(std::move(bottom));
    }
    if (acc && sgn((*acc)[c]) != 0) {
      IntVector& p = *acc;
      const Integer g = gcd(p[c], m_);
      const Integer mg = m_ / g;
      const Integer unit = inverse_mod(mod(p[c] / g, mg), mg);
      IntVector pivot(n_), leftover(n_), annihilated(n_);
      const Integer spill = 1 - (p[c] / g) * unit;
      for (std::size_t k = c; k < n_; ++k) {
        pivot[k] = mod(unit * p[k], m_);
        leftover[k] = mod(spill * p[k], m_);
      }
      pivot[c] = g;
      for (std::size_t k = c; k < n_; ++k) annihilated[k] = mod(mg * pivot[k], m_);
      if (!all_zero(leftover)) rest.push_back(std::move(leftover));
      if (!all_zero(annihilated)) rest.push_back(std::move(annihilated));
      if (g != m_) {
        rows_.push_back(std::move(pivot));
        pivot_.push_back(c);
      }
    }
    pool = std::move(rest);
  }
}

Integer ModularSubgroup::order() const {
  Integer ord = 1;
  for (std::size_t r = 0; r < rows_.size(); ++r) ord *= m_ / rows_[r][pivot_[r]];
  return ord;
}

IntVector ModularSubgroup::reduce(IntVector v) const {
  if (v.size() != n_) throw DimensionError("ModularSubgroup::reduce: dimension");
  reduce_all(v, m_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t c = pivot_[r];
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v[c].get_mpz_t(), rows_[r][c].get_mpz_t());
    if (sgn(q) == 0) continue;
    for (std::size_t k = c; k < n_; ++k) v[k] = mod(v[k] - q * rows_[r][k], m_);
  }
  return v;
}

bool ModularSubgroup::contains(const IntVector& v) const {
  return all_zero(reduce(v));
}

}  // namespace gerbe
