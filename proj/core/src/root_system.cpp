#include "gerbe/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace gerbe {
namespace {

RationalVector e(std::size_t i, std::size_t n) { return RationalVector::unit(i - 1, n); }

struct Classical {
  std::vector<int> marks, comarks;  // nodes 1..r
  std::size_t root_count;
};

Classical classical_data(Family f, int r) {
  Classical c;
  const auto n = static_cast<std::size_t>(r);
  switch (f) {
    case Family::A:
      c.marks.assign(n, 1);
      c.comarks.assign(n, 1);
      c.root_count = n * (n + 1);
      break;
    case Family::B:
      c.marks.assign(n, 2);
      c.marks[0] = 1;
      c.comarks.assign(n, 2);
      c.comarks[0] = 1;
      c.comarks[n - 1] = 1;
      c.root_count = 2 * n * n;
      break;
    case Family::C:
      c.marks.assign(n, 2);
      c.marks[n - 1] = 1;
      c.comarks.assign(n, 1);
      c.root_count = 2 * n * n;
      break;
    case Family::D:
      c.marks.assign(n, 2);
      c.marks[0] = c.marks[n - 2] = c.marks[n - 1] = 1;
      c.comarks = c.marks;
      c.root_count = 2 * n * (n - 1);
      break;
    case Family::E6:
      c.marks = {1, 2, 3, 2, 1, 2};
      c.comarks = c.marks;
      c.root_count = 72;
      break;
    case Family::E7:
      c.marks = {1, 2, 3, 4, 3, 2, 2};
      c.comarks = c.marks;
      c.root_count = 126;
      break;
  }
  return c;
}

// Dual basis to `basis` inside span(span_of): v_i with tr(v_i, basis_j) = delta.
std::vector<RationalVector> dual_in_span(const RootSystem& rs,
                                         const std::vector<RationalVector>& basis,
                                         const std::vector<RationalVector>& span_of) {
  const std::size_t r = basis.size();
  RationalMatrix g(r, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t m = 0; m < r; ++m) g(j, m) = rs.form(basis[j], span_of[m]);
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < r; ++i) {
    auto c = solve_rational(g, RationalVector::unit(i, r));
    if (!c) throw RootSystemError("degenerate Cartan matrix");
    RationalVector v(rs.ambient_dim());
    for (std::size_t m = 0; m < r; ++m)
      if (!(*c)[m].is_zero()) v += (*c)[m] * span_of[m];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  std::string u;
  for (char ch : s) u += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (u == "A") return Family::A;
  if (u == "B") return Family::B;
  if (u == "C") return Family::C;
  if (u == "D") return Family::D;
  if (u == "E6") return Family::E6;
  if (u == "E7") return Family::E7;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

RootSystem RootSystem::build(Family family, int rank) {
  const bool ok = (family == Family::A && rank >= 1) ||
                  ((family == Family::B || family == Family::C) && rank >= 2) ||
                  (family == Family::D && rank >= 3) ||
                  (family == Family::E6 && rank == 6) ||
                  (family == Family::E7 && rank == 7);
  if (!ok)
    throw RootSystemError("invalid rank " + std::to_string(rank) + " for family " +
                          to_string(family));
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  const auto r = static_cast<std::size_t>(rank);
  const Rational half(1, 2);
  switch (family) {
    case Family::A:
      rs.gram_.assign(r + 1, 1);
      for (std::size_t i = 1; i <= r; ++i) rs.simple_.push_back(e(i, r + 1) - e(i + 1, r + 1));
      break;
    case Family::B:
      rs.gram_.assign(r, 1);
      for (std::size_t i = 1; i < r; ++i) rs.simple_.push_back(e(i, r) - e(i + 1, r));
      rs.simple_.push_back(e(r, r));
      break;
    case Family::C:
      rs.gram_.assign(r, 2);
      for (std::size_t i = 1; i < r; ++i) rs.simple_.push_back(half * (e(i, r) - e(i + 1, r)));
      rs.simple_.push_back(e(r, r));
      break;
    case Family::D:
      rs.gram_.assign(r, 1);
      for (std::size_t i = 1; i < r; ++i) rs.simple_.push_back(e(i, r) - e(i + 1, r));
      rs.simple_.push_back(e(r - 1, r) + e(r, r));
      break;
    case Family::E6:
      rs.gram_.assign(7, 1);
      rs.gram_[6] = half;
      for (std::size_t i = 1; i <= 5; ++i) rs.simple_.push_back(e(i, 7) - e(i + 1, 7));
      rs.simple_.push_back(RationalVector{-half, -half, -half, half, half, half, 1});
      break;
    case Family::E7:
      rs.gram_.assign(8, 1);
      for (std::size_t i = 1; i <= 6; ++i) rs.simple_.push_back(e(i, 8) - e(i + 1, 8));
      rs.simple_.push_back(RationalVector{-half, -half, -half, -half, half, half, half, half});
      break;
  }
  rs.derive();
  return rs;
}

void RootSystem::derive() {
  const auto r = static_cast<std::size_t>(rank_);
  for (const auto& a : simple_) coroots_.push_back(coroot_of(a));
  coweights_ = dual_in_span(*this, simple_, coroots_);
  weights_ = dual_in_span(*this, coroots_, simple_);

  std::set<RationalVector> seen(simple_.begin(), simple_.end());
  std::vector<RationalVector> frontier = simple_;
  while (!frontier.empty()) {
    std::vector<RationalVector> next;
    for (const auto& b : frontier)
      for (const auto& a : simple_) {
        auto x = reflect(a, b);
        if (seen.insert(x).second) next.push_back(std::move(x));
      }
    frontier = std::move(next);
  }
  roots_.assign(seen.begin(), seen.end());

  const Classical cl = classical_data(family_, rank_);
  if (roots_.size() != cl.root_count)
    throw RootSystemError(name() + ": root count " + std::to_string(roots_.size()) +
                          " differs from the classical value");
  Rational longest = 0;
  for (const auto& a : roots_) longest = std::max(longest, form(a, a));
  if (longest != Rational(2))
    throw RootSystemError(name() + ": long roots do not have squared length 2");

  // Highest root: dominates every root coordinatewise in the simple-root basis.
  auto coeffs = [&](const RationalVector& a) {
    std::vector<Rational> c;
    for (const auto& l : coweights_) c.push_back(form(a, l));
    return c;
  };
  std::vector<std::vector<Rational>> all_coeffs;
  for (const auto& a : roots_) all_coeffs.push_back(coeffs(a));
  std::vector<Rational> top = all_coeffs.front();
  for (const auto& c : all_coeffs)
    for (std::size_t i = 0; i < r; ++i) top[i] = std::max(top[i], c[i]);
  const RationalVector* best = nullptr;
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    if (all_coeffs[k] != top) continue;
    if (best) throw RootSystemError(name() + ": highest root not unique");
    best = &roots_[k];
  }
  if (!best) throw RootSystemError(name() + ": no root dominates all others");
  highest_ = *best;

  const RationalVector phi_v = coroot_of(highest_);
  marks_ = {1};
  comarks_ = {1};
  for (std::size_t i = 0; i < r; ++i) {
    const Rational k = form(highest_, coweights_[i]);
    const Rational kv = form(phi_v, weights_[i]);
    if (!k.is_integer() || !kv.is_integer())
      throw RootSystemError(name() + ": non-integral mark");
    marks_.push_back(static_cast<int>(k.numerator().get_si()));
    comarks_.push_back(static_cast<int>(kv.numerator().get_si()));
  }
  if (std::vector<int>(marks_.begin() + 1, marks_.end()) != cl.marks ||
      std::vector<int>(comarks_.begin() + 1, comarks_.end()) != cl.comarks)
    throw RootSystemError(name() + ": marks or comarks differ from the classical table");

  tau_.push_back(RationalVector::zero(ambient_dim()));
  for (std::size_t i = 0; i < r; ++i)
    tau_.push_back(Rational(1, marks_[i + 1]) * coweights_[i]);

  coroot_lattice_ = Lattice(coroots_, ambient_dim());
  coweight_lattice_ = Lattice(coweights_, ambient_dim());
}

std::string RootSystem::name() const {
  if (family_ == Family::E6 || family_ == Family::E7) return to_string(family_);
  return to_string(family_) + std::to_string(rank_);
}

Rational RootSystem::form(const RationalVector& x, const RationalVector& y) const {
  if (x.size() != gram_.size() || y.size() != gram_.size())
    throw DimensionError("form: vector dimension mismatch for " + name());
  Rational s;
  for (std::size_t i = 0; i < gram_.size(); ++i)
    if (!x[i].is_zero() && !y[i].is_zero()) s += gram_[i] * x[i] * y[i];
  return s;
}

void RootSystem::check_vector(const RationalVector& v) const {
  if (v.size() != ambient_dim())
    throw DimensionError("vector of dimension " + std::to_string(v.size()) +
                         " is not in the ambient space of " + name());
  if (family_ == Family::A) {
    Rational s;
    for (const auto& x : v.coords()) s += x;
    if (!s.is_zero()) throw DimensionError("A-type vector must have zero coordinate sum");
  }
}

int RootSystem::dual_coxeter() const {
  int h = 0;
  for (int k : comarks_) h += k;
  return h;
}

bool RootSystem::is_root(const RationalVector& v) const {
  return std::binary_search(roots_.begin(), roots_.end(), v);
}

IntegerMatrix RootSystem::cartan_matrix() const {
  const auto r = static_cast<std::size_t>(rank_);
  IntegerMatrix c(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) c(i, j) = form(simple_[i], coroots_[j]).numerator();
  return c;
}

RationalVector RootSystem::coroot_of(const RationalVector& root) const {
  return (Rational(2) / form(root, root)) * root;
}

RationalVector RootSystem::reflect(const RationalVector& root, const RationalVector& v) const {
  const Rational c = form(coroot_of(root), v);
  if (c.is_zero()) return v;
  return v - c * root;
}

Rational bilinear_form(const RationalVector& x, const RationalVector& y,
                       const RootSystem& rs) {
  rs.check_vector(x);
  rs.check_vector(y);
  return rs.form(x, y);
}

std::vector<RationalVector> all_roots(const RootSystem& rs) { return rs.roots(); }

HighestRootData highest_root(const RootSystem& rs) {
  return {rs.highest_root(), rs.marks(), rs.comarks()};
}

RationalVector weyl_reflection(const RationalVector& root, const RationalVector& v,
                               const RootSystem& rs) {
  // Acts on the whole ambient space, so no zero-sum requirement for A.
  if (!rs.is_root(root))
    throw RootSystemError(root.str() + " is not a root of " + rs.name());
  return rs.reflect(root, v);
}

Lattice stabilizer_coweight_lattice(const RootSystem& rs, std::size_t i) {
  if (i >= rs.node_count())
    throw std::out_of_range("stabilizer_coweight_lattice: node index out of range");
  if (i == 0) return rs.coweight_lattice();
  std::vector<RationalVector> gens;
  for (std::size_t j = 1; j < rs.node_count(); ++j) {
    if (j == i) continue;
    gens.push_back(Rational(rs.marks()[j]) * (rs.tau(j) - rs.tau(i)));
  }
  gens.push_back(-rs.tau(i));
  return Lattice::generated_by(gens, rs.ambient_dim());
}

bool in_alcove(const RootSystem& rs, const RationalVector& v) {
  for (const auto& a : rs.simple_roots())
    if (rs.form(a, v).sign() < 0) return false;
  return rs.form(rs.highest_root(), v) <= Rational(1);
}

}  // namespace gerbe
