#include "gerbe/center.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gerbe {
namespace {

struct Generator {
  RationalVector theta;
  std::vector<std::size_t> perm;
  RationalMatrix weyl;
};

RationalVector e(std::size_t i, std::size_t n) { return RationalVector::unit(i - 1, n); }

// Image columns of the ambient basis vectors under the adjoint action of w_z.
std::vector<Generator> generators(const RootSystem& rs) {
  const auto r = static_cast<std::size_t>(rs.rank());
  const std::size_t n = rs.ambient_dim();
  const auto& cw = rs.fundamental_coweights();
  std::vector<RationalVector> cols(n);
  std::vector<std::size_t> p(r + 1);
  auto reversal = [&](std::size_t i) { return -e(r - i + 1, n); };
  switch (rs.family()) {
    case Family::A:
      for (std::size_t i = 1; i <= n; ++i) cols[i - 1] = e(i == n ? 1 : i + 1, n);
      for (std::size_t i = 0; i <= r; ++i) p[i] = (i + 1) % (r + 1);
      return {{cw[r - 1], p, RationalMatrix::from_columns(cols)}};
    case Family::B:
      for (std::size_t i = 1; i <= n; ++i) cols[i - 1] = i == 1 ? -e(1, n) : e(i, n);
      std::iota(p.begin(), p.end(), 0);
      std::swap(p[0], p[1]);
      return {{cw[0], p, RationalMatrix::from_columns(cols)}};
    case Family::C:
      for (std::size_t i = 1; i <= n; ++i) cols[i - 1] = reversal(i);
      for (std::size_t i = 0; i <= r; ++i) p[i] = r - i;
      return {{cw[r - 1], p, RationalMatrix::from_columns(cols)}};
    case Family::D:
      if (r % 2 == 1) {
        for (std::size_t i = 1; i <= n; ++i) cols[i - 1] = i == 1 ? e(r, n) : reversal(i);
        p[0] = r - 1;
        p[1] = r;
        for (std::size_t i = 2; i + 2 <= r; ++i) p[i] = r - i;
        p[r - 1] = 1;
        p[r] = 0;
        return {{cw[r - 1], p, RationalMatrix::from_columns(cols)}};
      } else {
        for (std::size_t i = 1; i <= n; ++i) cols[i - 1] = reversal(i);
        for (std::size_t i = 0; i <= r; ++i) p[i] = r - i;
        Generator z1{cw[r - 1], p, RationalMatrix::from_columns(cols)};
        for (std::size_t i = 1; i <= n; ++i)
          cols[i - 1] = (i == 1 || i == r) ? -e(i, n) : e(i, n);
        std::iota(p.begin(), p.end(), 0);
        std::swap(p[0], p[1]);
        std::swap(p[r - 1], p[r]);
        Generator z2{cw[0], p, RationalMatrix::from_columns(cols)};
        return {z1, z2};
      }
    case Family::E6: {
      const Rational h(1, 2);
      cols = {-e(6, 7), -e(5, 7), -e(4, 7), -e(3, 7),
              RationalVector{h, h, -h, -h, -h, -h, -1},
              RationalVector{h, h, -h, -h, -h, -h, 1},
              RationalVector{-h, h, 0, 0, 0, 0, 0}};
      return {{cw[4], {1, 5, 4, 3, 6, 0, 2}, RationalMatrix::from_columns(cols)}};
    }
    case Family::E7:
      for (std::size_t i = 1; i <= 8; ++i) cols[i - 1] = -e(9 - i, 8);
      return {{cw[0], {1, 0, 6, 5, 4, 3, 2, 7}, RationalMatrix::from_columns(cols)}};
  }
  throw std::logic_error("unreachable family");
}

std::size_t cyclic_order(Family f, int r) {
  switch (f) {
    case Family::A: return static_cast<std::size_t>(r) + 1;
    case Family::D: return 4;
    case Family::E6: return 3;
    default: return 2;
  }
}

bool is_d_even(Family f, int r) { return f == Family::D && r % 2 == 0; }

std::string subgroup_label(const CenterGroup& full, const std::vector<std::size_t>& members) {
  if (members.size() == 1) return "trivial";
  if (full.family() == Family::A) return "cyclic:" + std::to_string(members.size());
  if (is_d_even(full.family(), full.rank())) {
    if (members.size() == 4) return "Z2xZ2";
    return full.element(members[1]).label;
  }
  return "Z" + std::to_string(members.size());
}

// Full-center e-table from the closed forms.
ETable full_e_table(const RootSystem& rs, const CenterGroup& full) {
  const std::size_t n = full.order();
  const auto r = static_cast<std::size_t>(rs.rank());
  ETable t(n, rs.ambient_dim());
  const auto& cw = rs.fundamental_coweights();
  switch (rs.family()) {
    case Family::A: {
      const RationalVector big = Rational(static_cast<long>(r * (r + 1) / 2)) * cw[r - 1];
      for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b)
          if (a + b > r) t.at(a, b) = big;
      break;
    }
    case Family::B:
      if (r % 2 == 1) t.at(1, 1) = cw[0];
      break;
    case Family::C:
      t.at(1, 1) = cw[r - 1];
      break;
    case Family::D:
      if (r % 2 == 1) {
        for (std::size_t a = 1; a < 4; ++a)
          for (std::size_t b = 1; b < 4; ++b)
            if (a + b >= 4) t.at(a, b) = Rational(2) * cw[r - 1];
      } else {
        // Index order: 1, z1, z2, z1z2.
        const std::vector<std::pair<int, int>> pairs =
            r % 4 == 0 ? std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}
                       : std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {2, 1},
                                                          {2, 2}, {3, 2}, {3, 3}};
        for (auto [a, b] : pairs) t.at(a, b) = cw[0];
      }
      break;
    case Family::E6:
      break;
    case Family::E7:
      t.at(1, 1) = cw[0];
      break;
  }
  return t;
}

RationalVector apply_word(const RootSystem& rs, const std::vector<RationalVector>& roots,
                          RationalVector v) {
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) v = rs.reflect(*it, v);
  return v;
}

bool matches_on_t(const RootSystem& rs, const std::vector<RationalVector>& roots,
                  const RationalMatrix& w) {
  for (const auto& c : rs.coroots())
    if (apply_word(rs, roots, c) != w.apply(c)) return false;
  return true;
}

RationalVector simple_combination(const RootSystem& rs, const std::vector<int>& coeffs) {
  RationalVector v(rs.ambient_dim());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i]) v += Rational(coeffs[i]) * rs.simple_roots()[i];
  return v;
}

}  // namespace

std::size_t CenterGroup::index_of(std::string_view element_label) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].label == element_label) return i;
  throw std::invalid_argument("no center element labelled '" + std::string(element_label) + "'");
}

bool CenterGroup::is_cyclic() const {
  for (std::size_t g = 0; g < order(); ++g) {
    std::size_t x = g, k = 1;
    while (x != 0) x = mul(x, g), ++k;
    if (k == order()) return true;
  }
  return false;
}

CenterGroup center_of(const RootSystem& rs) {
  CenterGroup g;
  g.family_ = rs.family();
  g.rank_ = rs.rank();
  const auto gens = generators(rs);
  const std::size_t dim = rs.ambient_dim();
  if (is_d_even(rs.family(), rs.rank())) {
    g.elements_ = {{"1", RationalVector::zero(dim)},
                   {"z1", gens[0].theta},
                   {"z2", gens[1].theta},
                   {"z1z2", gens[0].theta + gens[1].theta}};
    g.mul_.resize(16);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) g.mul_[a * 4 + b] = a ^ b;
  } else {
    const std::size_t n = cyclic_order(rs.family(), rs.rank());
    for (std::size_t k = 0; k < n; ++k) {
      std::string label = k == 0 ? "1" : (k == 1 ? "z" : "z^" + std::to_string(k));
      g.elements_.push_back({label, Rational(static_cast<long>(k)) * gens[0].theta});
    }
    g.mul_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) g.mul_[a * n + b] = (a + b) % n;
  }
  const std::size_t n = g.elements_.size();
  g.inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.mul_[a * n + b] == 0) g.inv_[a] = b;
  g.full_index_.resize(n);
  std::iota(g.full_index_.begin(), g.full_index_.end(), 0);
  g.full_order_ = n;
  for (const auto& el : g.elements_)
    for (const auto& a : rs.roots())
      if (!rs.form(el.theta, a).is_integer())
        throw std::logic_error(rs.name() + ": exp(-2 pi i theta) is not central for " + el.label);
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  g.label_ = subgroup_label(g, all);
  return g;
}

CenterGroup make_subgroup(const CenterGroup& full, const std::vector<std::size_t>& members_in) {
  if (!full.is_full()) throw std::invalid_argument("make_subgroup: expects the full center");
  std::vector<std::size_t> members = members_in;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members[0] != 0)
    throw std::invalid_argument("make_subgroup: identity missing");
  const std::size_t n = members.size();
  CenterGroup g;
  g.family_ = full.family_;
  g.rank_ = full.rank_;
  g.full_order_ = full.order();
  g.full_index_ = members;
  for (auto m : members) g.elements_.push_back(full.element(m));
  auto local = [&](std::size_t f) {
    auto it = std::find(members.begin(), members.end(), f);
    if (it == members.end()) throw std::invalid_argument("make_subgroup: set is not closed");
    return static_cast<std::size_t>(it - members.begin());
  };
  g.mul_.resize(n * n);
  g.inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    g.inv_[a] = local(full.inverse(members[a]));
    for (std::size_t b = 0; b < n; ++b) g.mul_[a * n + b] = local(full.mul(members[a], members[b]));
  }
  g.label_ = subgroup_label(full, members);
  return g;
}

std::vector<CenterGroup> subgroups_of(const CenterGroup& full) {
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t a = 0; a < full.order(); ++a)
    for (std::size_t b = a; b < full.order(); ++b) {
      std::set<std::size_t> s{0};
      bool grew = true;
      s.insert(a);
      s.insert(b);
      while (grew) {
        grew = false;
        for (auto x : std::vector<std::size_t>(s.begin(), s.end()))
          for (auto y : std::vector<std::size_t>(s.begin(), s.end()))
            grew = s.insert(full.mul(x, y)).second || grew;
      }
      seen.insert(std::vector<std::size_t>(s.begin(), s.end()));
    }
  std::vector<CenterGroup> out;
  for (const auto& m : seen) out.push_back(make_subgroup(full, m));
  std::sort(out.begin(), out.end(), [](const CenterGroup& x, const CenterGroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.label() < y.label();
  });
  return out;
}

CenterGroup subgroup_by_label(const CenterGroup& full, std::string_view text) {
  const bool cyclic = full.is_cyclic();
  const bool deven = is_d_even(full.family(), full.rank());
  auto of_order = [&](std::size_t k) {
    for (auto& s : subgroups_of(full))
      if (s.order() == k) return s;
    throw std::invalid_argument("no subgroup of order " + std::to_string(k) + " in the center of " +
                                to_string(full.family()) + std::to_string(full.rank()));
  };
  auto parse_count = [&](std::size_t start) {
    if (start >= text.size()) throw ParseError("expected a number in subgroup '" + std::string(text) + "'", start);
    std::size_t v = 0;
    for (std::size_t i = start; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in subgroup '" +
                             std::string(text) + "'",
                         i);
      v = v * 10 + static_cast<std::size_t>(text[i] - '0');
      if (v > 1000000) throw ParseError("subgroup order too large", i);
    }
    return v;
  };
  if (text == "full") return full;
  if (text == "trivial") return make_subgroup(full, {0});
  if (text.rfind("cyclic:", 0) == 0) {
    const std::size_t k = parse_count(7);
    if (!cyclic) throw std::invalid_argument("cyclic:N requires a cyclic center");
    if (k == 0 || full.order() % k != 0)
      throw std::invalid_argument("cyclic:" + std::to_string(k) + " does not divide the center order " +
                                  std::to_string(full.order()));
    return of_order(k);
  }
  if (text == "Z2xZ2" || text == "z1" || text == "z2" || text == "z1z2") {
    if (!deven) throw std::invalid_argument("subgroup '" + std::string(text) + "' requires D with even rank");
    if (text == "Z2xZ2") return full;
    return make_subgroup(full, {0, full.index_of(text)});
  }
  if (!text.empty() && text[0] == 'Z') {
    const std::size_t k = parse_count(1);
    if (deven)
      throw std::invalid_argument("ambiguous subgroup '" + std::string(text) +
                                  "' for Z2xZ2; use z1, z2, z1z2 or Z2xZ2");
    if (k == 0 || full.order() % k != 0)
      throw std::invalid_argument("no subgroup Z" + std::to_string(k) + " in a center of order " +
                                  std::to_string(full.order()));
    return of_order(k);
  }
  throw ParseError("unknown subgroup '" + std::string(text) + "'", 0);
}

CenterAction action_of(const RootSystem& rs, const CenterGroup& z) {
  const auto gens = generators(rs);
  const std::size_t nodes = rs.node_count();
  const std::size_t fn = z.full_order();
  std::vector<std::vector<std::size_t>> fperm(fn);
  std::vector<RationalMatrix> fweyl(fn);
  std::vector<std::size_t> id(nodes);
  std::iota(id.begin(), id.end(), 0);
  fperm[0] = id;
  fweyl[0] = RationalMatrix::identity(rs.ambient_dim());
  auto compose = [](const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
    std::vector<std::size_t> out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
    return out;
  };
  if (is_d_even(rs.family(), rs.rank())) {
    fperm[1] = gens[0].perm;
    fweyl[1] = gens[0].weyl;
    fperm[2] = gens[1].perm;
    fweyl[2] = gens[1].weyl;
    fperm[3] = compose(fperm[1], fperm[2]);
    fweyl[3] = fweyl[1] * fweyl[2];
  } else {
    for (std::size_t k = 1; k < fn; ++k) {
      fperm[k] = compose(gens[0].perm, fperm[k - 1]);
      fweyl[k] = gens[0].weyl * fweyl[k - 1];
    }
  }

  CenterAction act;
  for (std::size_t a = 0; a < z.order(); ++a) {
    act.perm_.push_back(fperm[z.full_index(a)]);
    act.weyl_.push_back(fweyl[z.full_index(a)]);
  }

  const auto& co = rs.coroots();
  for (std::size_t a = 0; a < z.order(); ++a) {
    const auto& w = act.weyl_[a];
    const auto& p = act.perm_[a];
    const std::string who = rs.name() + " element " + z.element(a).label;
    for (const auto& x : co)
      for (const auto& y : co)
        if (rs.form(w.apply(x), w.apply(y)) != rs.form(x, y))
          throw std::logic_error(who + ": Weyl part does not preserve the form");
    for (std::size_t i = 0; i < nodes; ++i) {
      if (w.apply(rs.tau(i)) + rs.tau(p[0]) != rs.tau(p[i]))
        throw std::logic_error(who + ": affine action does not map tau_i to tau_zi");
      if (rs.marks()[p[i]] != rs.marks()[i] || rs.comarks()[p[i]] != rs.comarks()[i])
        throw std::logic_error(who + ": node permutation does not preserve marks");
    }
    for (std::size_t b = 0; b < z.order(); ++b) {
      const std::size_t ab = z.mul(a, b);
      if (compose(p, act.perm_[b]) != act.perm_[ab])
        throw std::logic_error(who + ": node permutation is not a homomorphism");
      for (const auto& x : co)
        if (w.apply(act.weyl_[b].apply(x)) != act.weyl_[ab].apply(x))
          throw std::logic_error(who + ": Weyl part is not a homomorphism on t");
    }
  }
  return act;
}

ETable e_table(const RootSystem& rs, const CenterGroup& z) {
  const CenterGroup full = z.is_full() ? z : center_of(rs);
  const ETable ft = full_e_table(rs, full);
  ETable t(z.order(), rs.ambient_dim());
  for (std::size_t a = 0; a < z.order(); ++a)
    for (std::size_t b = 0; b < z.order(); ++b) t.at(a, b) = ft(z.full_index(a), z.full_index(b));
  return t;
}

DeltaE delta_e_values(const RootSystem& rs, const CenterGroup& z, const CenterAction& act,
                      const ETable& e) {
  const std::size_t n = z.order();
  DeltaE d;
  d.order = n;
  d.values.reserve(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        RationalVector v = act.weyl_part(a).apply(e(b, c));
        v -= e(z.mul(a, b), c);
        v += e(a, z.mul(b, c));
        v -= e(a, b);
        d.values.push_back(std::move(v));
      }
  (void)rs;
  return d;
}

DeltaE delta_e(const RootSystem& rs, const CenterGroup& z, const CenterAction& act, const ETable& e) {
  DeltaE d = delta_e_values(rs, z, act, e);
  const std::size_t n = z.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (!rs.coroot_lattice().contains(d(a, b, c)))
          throw CocycleError("delta e at (" + z.element(a).label + ", " + z.element(b).label + ", " +
                                 z.element(c).label + ") = " + d(a, b, c).str() +
                                 " is not in the coroot lattice",
                             a, b, c);
  return d;
}

RationalVector affine_action(const RootSystem& rs, const CenterAction& act, std::size_t z,
                             const RationalVector& tau) {
  rs.check_vector(tau);
  if (!in_alcove(rs, tau)) throw std::invalid_argument("affine_action: point outside the alcove");
  return act.weyl_part(z).apply(tau) + rs.tau(act.act(z, 0));
}

std::vector<int> reflection_word(const RootSystem& rs, const CenterGroup& full, std::size_t z) {
  const int r = rs.rank();
  auto range = [](int from, int to, std::vector<int>& w) {
    if (from <= to)
      for (int i = from; i <= to; ++i) w.push_back(i);
    else
      for (int i = from; i >= to; --i) w.push_back(i);
  };
  std::vector<int> g1, g2;
  switch (rs.family()) {
    case Family::A:
      range(1, r, g1);
      break;
    case Family::B:
      range(1, r, g1);
      range(r - 1, 1, g1);
      break;
    case Family::C:
      for (int j = r; j >= 1; --j) range(j, r, g1);
      break;
    case Family::D:
      for (int j = r - 1; j >= 1; --j) {
        if (j % 2 == 1) {
          if (j <= r - 2) range(j, r - 2, g1);
          g1.push_back(r);
        } else {
          range(j, r - 1, g1);
        }
      }
      if (r % 2 == 0) {
        range(1, r - 2, g2);
        g2.push_back(r);
        range(r - 1, 1, g2);
      }
      break;
    case Family::E6:
      g1 = {1, 2, 3, 4, 5, 6, 3, 2, 1, 4, 3, 2, 6, 3, 4, 5};
      break;
    case Family::E7:
      g1 = {1, 2, 3, 4, 5, 7, 4, 6, 3, 5, 2, 4, 1, 3, 7, 4, 2, 5, 3, 6, 4, 7, 5, 4, 3, 2, 1};
      break;
  }
  if (!full.is_full()) throw std::invalid_argument("reflection_word: expects the full center");
  std::vector<int> w;
  if (is_d_even(rs.family(), r)) {
    if (z & 1) w.insert(w.end(), g1.begin(), g1.end());
    if (z & 2) w.insert(w.end(), g2.begin(), g2.end());
  } else {
    for (std::size_t k = 0; k < z; ++k) w.insert(w.end(), g1.begin(), g1.end());
  }
  return w;
}

bool reflection_word_check(const RootSystem& rs, const CenterGroup& full, const CenterAction& act,
                           std::size_t z) {
  std::vector<RationalVector> roots;
  for (int i : reflection_word(rs, full, z)) roots.push_back(rs.simple_roots()[i - 1]);
  return matches_on_t(rs, roots, act.weyl_part(z));
}

std::vector<RationalVector> short_reflection_roots(const RootSystem& rs) {
  if (rs.family() == Family::E6) {
    const auto b1 = simple_combination(rs, {1, 1, 1, 1, 0, 0});
    const auto b2 = simple_combination(rs, {0, 0, 1, 1, 1, 1});
    const auto b4 = simple_combination(rs, {1, 1, 1, 0, 0, 1});
    const auto b5 = simple_combination(rs, {0, 1, 1, 1, 1, 0});
    return {b1, b4, b5, b2};
  }
  if (rs.family() == Family::E7) {
    const auto b1 = simple_combination(rs, {1, 2, 2, 2, 1, 0, 1});
    const auto b3 = simple_combination(rs, {1, 1, 2, 2, 1, 1, 1});
    const auto b7 = simple_combination(rs, {1, 1, 1, 2, 2, 1, 1});
    return {b1, b3, b7};
  }
  return {};
}

bool short_reflection_check(const RootSystem& rs, const CenterGroup& full, const CenterAction& act) {
  const auto roots = short_reflection_roots(rs);
  if (roots.empty() || full.order() < 2) return false;
  for (const auto& b : roots)
    if (!rs.is_root(b)) return false;
  return matches_on_t(rs, roots, act.weyl_part(1));
}

CenterData center_data(const RootSystem& rs, const CenterGroup& z) {
  return {z, action_of(rs, z), e_table(rs, z)};
}

}  // namespace gerbe
