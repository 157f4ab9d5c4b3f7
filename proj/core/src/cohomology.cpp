#include "gerbe/cohomology.hpp"

#include <set>
#include <stdexcept>

namespace gerbe {
namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Raw (unreduced) values of both forms of U at level 1.
struct RawObstruction {
  std::vector<Rational> first, second;
};

RawObstruction raw_obstruction(const RootSystem& rs, const CenterData& data, const ETable& e) {
  const auto& z = data.group;
  const auto& act = data.action;
  const std::size_t n = z.order();
  RawObstruction raw;
  raw.first.resize(n * n * n);
  raw.second.resize(n * n * n);
  auto tau0 = [&](std::size_t x) -> const RationalVector& { return rs.tau(act.act(x, 0)); };
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b)
      for (std::size_t c = 1; c < n; ++c) {
        const std::size_t ab = z.mul(a, b), bc = z.mul(b, c), abc = z.mul(ab, c);
        RationalVector de = act.weyl_part(a).apply(e(b, c));
        de -= e(ab, c);
        de += e(a, bc);
        de -= e(a, b);
        const std::size_t idx = (a * n + b) * n + c;
        raw.first[idx] = rs.form(tau0(abc) - tau0(ab), e(a, b)) + rs.form(tau0(abc), de);
        raw.second[idx] = rs.form(tau0(bc) - tau0(z.inverse(a)), e(b, c)) -
                          rs.form(tau0(ab), e(a, b)) - rs.form(tau0(abc), e(ab, c) - e(a, bc));
      }
  return raw;
}

PhaseCochain scaled_cochain(const std::vector<Rational>& raw, std::size_t n, long level) {
  PhaseCochain u(3, n);
  for (std::size_t i = 0; i < raw.size(); ++i) u.values()[i] = Phase(Rational(level) * raw[i]);
  return u;
}

PhaseCochain checked_obstruction(const RawObstruction& raw, std::size_t n, long level) {
  PhaseCochain first = scaled_cochain(raw.first, n, level);
  PhaseCochain second = scaled_cochain(raw.second, n, level);
  if (first != second)
    throw std::logic_error("the two forms of the obstruction cocycle disagree");
  return second;
}

IntVector to_integers(const PhaseCochain& c, const std::vector<std::vector<std::size_t>>& tuples,
                      const Integer& m) {
  IntVector b;
  b.reserve(tuples.size());
  for (const auto& t : tuples) {
    const Rational x = c.at(t).value() * Rational(m);
    if (!x.is_integer()) throw std::logic_error("modulus does not clear cochain denominators");
    b.push_back(x.numerator());
  }
  return b;
}

PhaseCochain from_integers(const IntVector& x, const std::vector<std::vector<std::size_t>>& tuples,
                           std::size_t degree, std::size_t order, const Integer& m) {
  PhaseCochain c(degree, order);
  for (std::size_t i = 0; i < tuples.size(); ++i) c.at(tuples[i]) = Phase(Rational(x[i], m));
  return c;
}

IntVector scaled_mod(const IntVector& v, const Integer& s, const Integer& m) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod(v[i] * s, m);
  return out;
}

IntVector add_mod(const IntVector& a, const IntVector& b, const Integer& m) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod(a[i] + b[i], m);
  return out;
}

struct ClassCount {
  std::size_t count;
  std::vector<IntVector> reps;
};

ClassCount count_classes(const CoboundarySolution& sol, const IntegerMatrix& delta1,
                         const Integer& saturation, std::size_t ncols) {
  const Integer mm = sol.modulus * saturation;
  std::vector<IntVector> bgens;
  for (std::size_t j = 0; j < delta1.cols(); ++j) {
    IntVector col(delta1.rows());
    for (std::size_t i = 0; i < delta1.rows(); ++i) col[i] = delta1(i, j);
    bgens.push_back(std::move(col));
  }
  std::vector<IntVector> kgens;
  for (const auto& k : sol.kernel) kgens.push_back(scaled_mod(k, saturation, mm));
  const ModularSubgroup boundaries(ncols, mm, bgens);
  std::vector<IntVector> all = bgens;
  all.insert(all.end(), kgens.begin(), kgens.end());
  const ModularSubgroup sum(ncols, mm, all);
  const Integer ratio = sum.order() / boundaries.order();

  std::set<IntVector> seen{boundaries.reduce(scaled_mod(sol.particular, saturation, mm))};
  std::vector<IntVector> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<IntVector> next;
    for (const auto& v : frontier)
      for (const auto& g : kgens) {
        auto w = boundaries.reduce(add_mod(v, g, mm));
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  if (ratio != static_cast<unsigned long>(seen.size()))
    throw std::logic_error("solution class count: orbit enumeration and index disagree");
  return {seen.size(), std::vector<IntVector>(seen.begin(), seen.end())};
}

}  // namespace

// --- PhaseCochain ------------------------------------------------------------

PhaseCochain::PhaseCochain(std::size_t degree, std::size_t order)
    : degree_(degree), order_(order), values_(ipow(order, degree)) {}

std::size_t PhaseCochain::flat(const std::vector<std::size_t>& args) const {
  if (args.size() != degree_) throw DimensionError("cochain argument count mismatch");
  std::size_t idx = 0;
  for (auto a : args) {
    if (a >= order_) throw std::out_of_range("cochain argument out of range");
    idx = idx * order_ + a;
  }
  return idx;
}

bool PhaseCochain::is_zero() const {
  for (const auto& p : values_)
    if (!p.is_zero()) return false;
  return true;
}

bool PhaseCochain::is_normalized() const {
  for (std::size_t idx = 0; idx < values_.size(); ++idx) {
    std::size_t x = idx;
    bool has_identity = false;
    for (std::size_t d = 0; d < degree_; ++d, x /= order_) has_identity = has_identity || x % order_ == 0;
    if (has_identity && !values_[idx].is_zero()) return false;
  }
  return true;
}

Integer PhaseCochain::denominator() const {
  Integer l = 1;
  for (const auto& p : values_) l = lcm(l, p.value().denominator());
  return l;
}

std::vector<std::vector<std::size_t>> nonidentity_tuples(std::size_t order, std::size_t degree) {
  std::vector<std::vector<std::size_t>> out;
  if (order < 2) return out;
  std::vector<std::size_t> t(degree, 1);
  for (;;) {
    out.push_back(t);
    std::size_t d = degree;
    while (d > 0) {
      --d;
      if (++t[d] < order) break;
      t[d] = 1;
      if (d == 0) return out;
    }
    if (degree == 0) return out;
  }
}

// --- Characters ----------------------------------------------------------------

Phase chi_vertex(const RootSystem& rs, std::size_t i, const RationalVector& p) {
  return Phase(rs.form(rs.tau(i), p));
}

Phase chi_pair(const RootSystem& rs, std::size_t i, std::size_t j, const RationalVector& t) {
  return Phase(rs.form(rs.tau(j) - rs.tau(i), t));
}

namespace {

std::string lemma1_at(const RootSystem& rs, const CenterData& data, std::size_t z, std::size_t i,
                      std::size_t j, const Lattice& stab_i, std::size_t& checks) {
  const auto& act = data.action;
  const std::size_t zinv = data.group.inverse(z);
  const std::size_t iz = act.act(zinv, i), jz = act.act(zinv, j);
  const auto& winv = act.weyl_part(zinv);
  for (const auto& p : stab_i.basis()) {
    ++checks;
    if (chi_vertex(rs, iz, winv.apply(p)) != chi_vertex(rs, i, p))
      return "chi_" + std::to_string(i) + " not invariant under " + data.group.element(z).label +
             " at " + p.str();
  }
  for (const auto& q : rs.coroots()) {
    ++checks;
    if (chi_pair(rs, iz, jz, winv.apply(q)) != chi_pair(rs, i, j, q))
      return "chi_" + std::to_string(i) + std::to_string(j) + " not invariant under " +
             data.group.element(z).label + " at " + q.str();
  }
  return {};
}

}  // namespace

bool lemma1_check(const RootSystem& rs, const CenterData& data, std::size_t z, std::size_t i,
                  std::size_t j) {
  const Lattice stab = stabilizer_coweight_lattice(rs, i).intersect(rs.coroot_lattice());
  std::size_t checks = 0;
  return lemma1_at(rs, data, z, i, j, stab, checks).empty();
}

Lemma1Report lemma1_sweep(const RootSystem& rs, const CenterData& data) {
  Lemma1Report rep;
  std::vector<Lattice> stab;
  for (std::size_t i = 0; i < rs.node_count(); ++i)
    stab.push_back(stabilizer_coweight_lattice(rs, i).intersect(rs.coroot_lattice()));
  for (std::size_t z = 0; z < data.group.order(); ++z)
    for (std::size_t i = 0; i < rs.node_count(); ++i)
      for (std::size_t j = 0; j < rs.node_count(); ++j) {
        auto f = lemma1_at(rs, data, z, i, j, stab[i], rep.checks);
        if (!f.empty() && rep.ok) {
          rep.ok = false;
          rep.failure = f;
        }
      }
  return rep;
}

// --- Obstruction ---------------------------------------------------------------

ObstructionForms u_obstruction_forms(const RootSystem& rs, const CenterData& data, const ETable& e,
                                     long level) {
  const auto raw = raw_obstruction(rs, data, e);
  const std::size_t n = data.group.order();
  return {scaled_cochain(raw.first, n, level), scaled_cochain(raw.second, n, level)};
}

PhaseCochain u_obstruction(const RootSystem& rs, const CenterData& data, const ETable& e,
                           long level) {
  return checked_obstruction(raw_obstruction(rs, data, e), data.group.order(), level);
}

PhaseCochain coboundary_phase(const CenterGroup& z, const PhaseCochain& c) {
  const std::size_t n = c.degree();
  if (n < 1 || n > 3) throw std::invalid_argument("coboundary_phase: degree must be 1, 2 or 3");
  if (c.order() != z.order()) throw DimensionError("coboundary_phase: group order mismatch");
  PhaseCochain out(n + 1, z.order());
  const std::size_t total = out.size();
  std::vector<std::size_t> g(n + 1), face(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t x = idx;
    for (std::size_t d = n + 1; d-- > 0; x /= z.order()) g[d] = x % z.order();
    Rational s;
    for (std::size_t k = 1; k < n + 1; ++k) face[k - 1] = g[k];
    s += c.at(face).value();
    for (std::size_t i = 1; i <= n; ++i) {
      std::size_t f = 0;
      for (std::size_t k = 0; k < n + 1; ++k) {
        if (k == i) continue;
        face[f++] = (k == i - 1) ? z.mul(g[i - 1], g[i]) : g[k];
      }
      if (i % 2) s -= c.at(face).value();
      else s += c.at(face).value();
    }
    for (std::size_t k = 0; k < n; ++k) face[k] = g[k];
    if ((n + 1) % 2) s -= c.at(face).value();
    else s += c.at(face).value();
    out.values()[idx] = Phase(s);
  }
  return out;
}

bool is_cocycle(const CenterGroup& z, const PhaseCochain& u3) {
  return coboundary_phase(z, u3).is_zero();
}

IntegerMatrix coboundary_matrix(const CenterGroup& z, std::size_t degree) {
  const auto rows = nonidentity_tuples(z.order(), degree + 1);
  const auto cols = nonidentity_tuples(z.order(), degree);
  IntegerMatrix m(rows.size(), cols.size());
  auto col_of = [&](const std::vector<std::size_t>& t) -> long {
    std::size_t idx = 0;
    for (auto a : t) {
      if (a == 0) return -1;
      idx = idx * (z.order() - 1) + (a - 1);
    }
    return static_cast<long>(idx);
  };
  std::vector<std::size_t> face(degree);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& g = rows[r];
    for (std::size_t i = 0; i <= degree + 1; ++i) {
      // Face i: drop g_0 (i = 0), merge g_{i-1} g_i, or drop the last entry.
      std::size_t f = 0;
      if (i == 0) {
        for (std::size_t k = 1; k <= degree; ++k) face[f++] = g[k];
      } else if (i == degree + 1) {
        for (std::size_t k = 0; k < degree; ++k) face[f++] = g[k];
      } else {
        for (std::size_t k = 0; k <= degree; ++k) {
          if (k == i) continue;
          face[f++] = (k == i - 1) ? z.mul(g[i - 1], g[i]) : g[k];
        }
      }
      const long c = col_of(face);
      if (c < 0) continue;
      m(r, static_cast<std::size_t>(c)) += (i % 2) ? -1 : 1;
    }
  }
  return m;
}

// --- Solver ----------------------------------------------------------------------

CoboundarySolver::CoboundarySolver(const CenterGroup& z)
    : z_(z), delta2_(coboundary_matrix(z, 2)) {
  snf_ = std::make_shared<const SmithDecomposition>(smith_normal_form(delta2_));
}

Integer CoboundarySolver::modulus_for(const PhaseCochain& u3) const {
  const Integer n(static_cast<unsigned long>(z_.order()));
  return n * lcm(u3.denominator(), n);
}

std::optional<CoboundarySolution> CoboundarySolver::solve(const PhaseCochain& u3) const {
  return solve(u3, modulus_for(u3));
}

std::optional<CoboundarySolution> CoboundarySolver::solve(const PhaseCochain& u3,
                                                          const Integer& modulus) const {
  if (u3.degree() != 3 || u3.order() != z_.order())
    throw DimensionError("solve: expected a 3-cochain on the solver's group");
  if (!is_cocycle(z_, u3)) throw std::invalid_argument("solve: U is not a cocycle");
  const auto rows = nonidentity_tuples(z_.order(), 3);
  const auto cols = nonidentity_tuples(z_.order(), 2);
  const auto b = to_integers(u3, rows, modulus);
  auto sol = solve_linear_mod(*snf_, b, modulus);
  if (!sol) return std::nullopt;
  CoboundarySolution out;
  out.modulus = modulus;
  const ModularSubgroup ker(cols.size(), modulus, sol->kernel);
  out.particular = ker.reduce(sol->particular);
  out.kernel = std::move(sol->kernel);
  out.u = from_integers(out.particular, cols, 2, z_.order(), modulus);
  return out;
}

std::optional<CoboundarySolution> solve_coboundary(const CenterGroup& z, const PhaseCochain& u3) {
  return CoboundarySolver(z).solve(u3);
}

SolutionClasses solution_classes(const CoboundarySolver& solver, const PhaseCochain& u3) {
  const auto sol = solver.solve(u3);
  if (!sol) throw std::runtime_error("solution_classes: delta u = U has no solution");
  const auto& z = solver.group();
  const Integer n(static_cast<unsigned long>(z.order()));
  const auto cols = nonidentity_tuples(z.order(), 2);
  const IntegerMatrix delta1 = coboundary_matrix(z, 1);
  const ClassCount once = count_classes(*sol, delta1, n, cols.size());
  const ClassCount twice = count_classes(*sol, delta1, n * n, cols.size());
  if (once.count != twice.count)
    throw std::runtime_error("solution_classes: count changed under a second saturation");
  SolutionClasses out;
  out.count = once.count;
  out.modulus = sol->modulus * n;
  for (const auto& r : once.reps)
    out.representatives.push_back(from_integers(r, cols, 2, z.order(), out.modulus));
  return out;
}

SolutionClasses solution_classes(const RootSystem& rs, const CenterData& data, long level) {
  return solution_classes(CoboundarySolver(data.group), u_obstruction(rs, data, level));
}

LevelReport minimal_level(const RootSystem& rs, const CenterData& data) {
  return minimal_level(rs, data, data.etable);
}

LevelReport minimal_level(const RootSystem& rs, const CenterData& data, const ETable& e) {
  LevelReport rep;
  rep.family = rs.family();
  rep.rank = rs.rank();
  rep.subgroup = data.group.label();
  const CoboundarySolver solver(data.group);
  const auto raw = raw_obstruction(rs, data, e);
  for (long k = 1; k <= kLevelCap; ++k) {
    const PhaseCochain u3 = checked_obstruction(raw, data.group.order(), k);
    auto sol = solver.solve(u3);
    rep.trivial_at.push_back(sol.has_value());
    if (!sol) continue;
    rep.k_min = k;
    rep.u = sol->u;
    auto classes = solution_classes(solver, u3);
    rep.class_count = classes.count;
    rep.representatives = std::move(classes.representatives);
    return rep;
  }
  throw std::runtime_error(rs.name() + " " + data.group.label() + ": no solution up to level " +
                           std::to_string(kLevelCap));
}

// --- Vertex families -----------------------------------------------------------

VertexFamily lemma3_extend(const RootSystem& rs, const CenterData& data, long level,
                           const PhaseCochain& u) {
  const auto& z = data.group;
  if (coboundary_phase(z, u) != u_obstruction(rs, data, level))
    throw std::invalid_argument("lemma3_extend: u does not solve delta u = U");
  const std::size_t nodes = rs.node_count(), n = z.order();
  VertexFamily fam(nodes, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& eab = data.etable(a, b);
      const std::size_t top = data.action.act(z.mul(a, b), 0);
      for (std::size_t k = 0; k < nodes; ++k) {
        const Phase v = u(a, b) - level * chi_pair(rs, k, top, eab);
        for (std::size_t i = 0; i < nodes; ++i)
          for (std::size_t j = 0; j < nodes; ++j) fam.at(i, j, k, a, b) = v;
      }
    }
  return fam;
}

RtcResult verify_rtc(const RootSystem& rs, const CenterData& data, long level,
                     const VertexFamily& fam) {
  const auto& z = data.group;
  const auto& act = data.action;
  const std::size_t nodes = rs.node_count(), n = z.order();
  if (fam.nodes() != nodes || fam.order() != n) throw DimensionError("verify_rtc: family shape");
  const DeltaE de = delta_e_values(rs, z, act, data.etable);
  // te[l][a][b] = tr(tau_l, e_{a,b}); tde[l][a][b][c] = tr(tau_l, (delta e)_{a,b,c}).
  std::vector<Rational> te(nodes * n * n), tde(nodes * n * n * n);
  for (std::size_t l = 0; l < nodes; ++l)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        te[(l * n + a) * n + b] = rs.form(rs.tau(l), data.etable(a, b));
        for (std::size_t c = 0; c < n; ++c)
          tde[((l * n + a) * n + b) * n + c] = rs.form(rs.tau(l), de(a, b, c));
      }
  RtcResult res;
  const Rational kk(level);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t ainv = z.inverse(a);
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = z.mul(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t bc = z.mul(b, c);
        for (std::size_t i = 0; i < nodes; ++i)
          for (std::size_t j = 0; j < nodes; ++j)
            for (std::size_t k = 0; k < nodes; ++k)
              for (std::size_t l = 0; l < nodes; ++l) {
                ++res.checks;
                const Phase lhs = fam(act.act(ainv, j), act.act(ainv, k), act.act(ainv, l), b, c) -
                                  fam(i, k, l, ab, c) + fam(i, j, l, a, bc) - fam(i, j, k, a, b);
                const Phase rhs(kk * (te[(l * n + a) * n + b] - te[(k * n + a) * n + b] +
                                      tde[((l * n + a) * n + b) * n + c]));
                if (lhs != rhs && res.ok) {
                  res.ok = false;
                  res.counterexample = RtcCounterexample{i, j, k, l, a, b, c, lhs, rhs};
                }
              }
      }
    }
  }
  return res;
}

}  // namespace gerbe
