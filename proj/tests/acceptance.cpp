// Acceptance suite: one PASS/FAIL line per criterion. All checks are exact.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "gerbe/cohomology.hpp"

using namespace gerbe;

namespace {

struct Case {
  Family family;
  int rank;
  std::string subgroup;
  long expected;  // level predicted by the closed-form parity rules
};

std::string name(const Case& c) {
  return RootSystem::build(c.family, c.rank).name() + "/" + c.subgroup;
}

// Expected levels from the closed-form parity rules, independent of the solver.
std::vector<Case> level_cases() {
  std::vector<Case> out;
  for (int r = 1; r <= 11; ++r)
    for (int np = 1; np <= r + 1; ++np) {
      if ((r + 1) % np) continue;
      const int npp = (r + 1) / np;
      const long k = (np % 2 == 1 || npp % 2 == 0) ? 1 : 2;
      out.push_back({Family::A, r, np == 1 ? "trivial" : "cyclic:" + std::to_string(np), k});
    }
  for (int r = 2; r <= 9; ++r) out.push_back({Family::B, r, "full", 1});
  for (int r = 2; r <= 9; ++r) out.push_back({Family::C, r, "full", r % 2 == 0 ? 1 : 2});
  for (int r : {5, 7, 9}) {
    out.push_back({Family::D, r, "Z4", 2});
    out.push_back({Family::D, r, "Z2", 1});
  }
  for (int r : {4, 6, 8}) {
    const long k = (r / 2) % 2 == 0 ? 1 : 2;
    out.push_back({Family::D, r, "Z2xZ2", k});
    out.push_back({Family::D, r, "z1", k});
    out.push_back({Family::D, r, "z1z2", k});
    out.push_back({Family::D, r, "z2", 1});
  }
  out.push_back({Family::E6, 6, "full", 1});
  out.push_back({Family::E7, 7, "full", 2});
  return out;
}

struct Loaded {
  Case c;
  RootSystem rs;
  CenterData data;
};

std::vector<Loaded> load(const std::vector<Case>& cases) {
  std::vector<Loaded> out;
  for (const auto& c : cases) {
    auto rs = RootSystem::build(c.family, c.rank);
    auto data = center_data(rs, subgroup_by_label(center_of(rs), c.subgroup));
    out.push_back({c, std::move(rs), std::move(data)});
  }
  return out;
}

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- criteria ----------------------------------------------------------------

Outcome level_table() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto cases = load(level_cases());
  for (const auto& l : cases) {
    const long k = minimal_level(l.rs, l.data).k_min;
    if (k != l.c.expected)
      o.fail(name(l.c) + ": k_min " + std::to_string(k) + " expected " + std::to_string(l.c.expected));
  }
  const double t = seconds_since(t0);
  if (t >= 60) o.fail("runtime " + std::to_string(t) + " s");
  if (o.ok) o.detail = std::to_string(cases.size()) + " cases, " + std::to_string(t) + " s";
  return o;
}

Outcome cocycle_identities() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& l : load(level_cases())) {
    try {
      delta_e(l.rs, l.data.group, l.data.action, l.data.etable);
    } catch (const CocycleError& e) {
      o.fail(name(l.c) + ": " + e.what());
    }
    for (long k = 1; k <= 3; ++k) {
      const auto f = u_obstruction_forms(l.rs, l.data, l.data.etable, k);
      if (!(f.first == f.second)) o.fail(name(l.c) + ": forms of U differ at k=" + std::to_string(k));
      if (!is_cocycle(l.data.group, f.second)) o.fail(name(l.c) + ": dU != 0 at k=" + std::to_string(k));
      ++checks;
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " (case, k) pairs";
  return o;
}

Outcome associativity() {
  Outcome o;
  std::ostringstream d;
  const std::vector<std::pair<Family, int>> reps = {{Family::A, 5}, {Family::B, 4}, {Family::C, 4},
                                                    {Family::C, 5}, {Family::D, 5}, {Family::D, 8},
                                                    {Family::E6, 6}, {Family::E7, 7}};
  for (auto [f, r] : reps) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rs = RootSystem::build(f, r);
    const auto data = center_data(rs, center_of(rs));
    const auto rep = minimal_level(rs, data);
    const auto fam = lemma3_extend(rs, data, rep.k_min, rep.u);
    const auto res = verify_rtc(rs, data, rep.k_min, fam);
    const double t = seconds_since(t0);
    const std::size_t n = rs.node_count(), z = data.group.order();
    if (!res.ok) {
      const auto& c = *res.counterexample;
      o.fail(rs.name() + ": fails at i,j,k,l=" + std::to_string(c.i) + "," + std::to_string(c.j) + "," +
             std::to_string(c.k) + "," + std::to_string(c.l));
    }
    if (res.checks > n * n * n * n * z * z * z) o.fail(rs.name() + ": too many checks");
    if (t >= 10) o.fail(rs.name() + ": " + std::to_string(t) + " s");
    d << rs.name() << "=" << res.checks << " ";
  }
  if (o.ok) o.detail = d.str();
  return o;
}

std::vector<std::size_t> listed_perm(Family f, int r, const std::string& element) {
  std::vector<std::size_t> p(r + 1);
  const auto u = [](int x) { return static_cast<std::size_t>(x); };
  switch (f) {
    case Family::A:
      for (int i = 0; i <= r; ++i) p[i] = u((i + 1) % (r + 1));
      break;
    case Family::B:
      for (int i = 0; i <= r; ++i) p[i] = u(i);
      p[0] = 1, p[1] = 0;
      break;
    case Family::C:
      for (int i = 0; i <= r; ++i) p[i] = u(r - i);
      break;
    case Family::D:
      if (r % 2) {
        for (int i = 2; i <= r - 2; ++i) p[i] = u(r - i);
        p[0] = u(r - 1), p[1] = u(r), p[r - 1] = 1, p[r] = 0;
      } else if (element == "z1") {
        for (int i = 1; i < r; ++i) p[i] = u(r - i);
        p[0] = u(r), p[r] = 0;
      } else {
        for (int i = 2; i <= r - 2; ++i) p[i] = u(i);
        p[0] = 1, p[1] = 0, p[r - 1] = u(r), p[r] = u(r - 1);
      }
      break;
    case Family::E6:
      p = {1, 5, 4, 3, 6, 0, 2};
      break;
    case Family::E7:
      p = {1, 0, 6, 5, 4, 3, 2, 7};
      break;
  }
  return p;
}

std::size_t listed_word_length(Family f, int r, const std::string& element) {
  switch (f) {
    case Family::A: return r;
    case Family::B: return 2 * r - 1;
    case Family::C: return r * (r + 1) / 2;
    case Family::D: return element == "z2" ? 2 * (r - 1) : r * (r - 1) / 2;
    case Family::E6: return 16;
    case Family::E7: return 27;
  }
  return 0;
}

Outcome geometry() {
  Outcome o;
  std::size_t words = 0;
  std::vector<std::pair<Family, int>> reps;
  for (int r = 1; r <= 11; ++r) reps.emplace_back(Family::A, r);
  for (int r = 2; r <= 9; ++r) reps.emplace_back(Family::B, r), reps.emplace_back(Family::C, r);
  for (int r = 4; r <= 9; ++r) reps.emplace_back(Family::D, r);
  reps.emplace_back(Family::E6, 6);
  reps.emplace_back(Family::E7, 7);
  for (auto [f, r] : reps) {
    const auto rs = RootSystem::build(f, r);
    const auto z = center_of(rs);
    const auto act = action_of(rs, z);
    const std::vector<std::string> gens = (f == Family::D && r % 2 == 0)
                                              ? std::vector<std::string>{"z1", "z2"}
                                              : std::vector<std::string>{"z"};
    for (const auto& g : gens) {
      const std::size_t a = z.index_of(g);
      if (act.node_perm(a) != listed_perm(f, r, g)) o.fail(rs.name() + " " + g + ": node permutation");
      if (reflection_word(rs, z, a).size() != listed_word_length(f, r, g))
        o.fail(rs.name() + " " + g + ": word length");
    }
    for (std::size_t a = 0; a < z.order(); ++a) {
      for (std::size_t i = 0; i < rs.node_count(); ++i) {
        const std::size_t j = act.act(a, i);
        if (affine_action(rs, act, a, rs.tau(i)) != rs.tau(j))
          o.fail(rs.name() + ": affine action on tau_" + std::to_string(i));
        if (rs.marks()[i] != rs.marks()[j] || rs.comarks()[i] != rs.comarks()[j])
          o.fail(rs.name() + ": marks not preserved");
      }
      if (!reflection_word_check(rs, z, act, a)) o.fail(rs.name() + " " + z.element(a).label + ": word != W_z");
      ++words;
    }
    if (!short_reflection_roots(rs).empty() && !short_reflection_check(rs, z, act))
      o.fail(rs.name() + ": non-simple factorization");
  }
  if (o.ok) o.detail = std::to_string(reps.size()) + " root systems, " + std::to_string(words) + " words";
  return o;
}

Outcome doubling() {
  Outcome o;
  for (int r : {4, 6, 8}) {
    const auto rs = RootSystem::build(Family::D, r);
    const auto data = center_data(rs, center_of(rs));
    const auto rep = minimal_level(rs, data);
    const auto c = solution_classes(rs, data, rep.k_min);
    if (c.count != 2) o.fail(rs.name() + "/Z2xZ2: " + std::to_string(c.count) + " classes");
  }
  std::size_t cyclic = 0;
  for (const auto& l : load(level_cases())) {
    if (!l.data.group.is_cyclic()) continue;
    const auto rep = minimal_level(l.rs, l.data);
    if (rep.class_count != 1) o.fail(name(l.c) + ": " + std::to_string(rep.class_count) + " classes");
    ++cyclic;
  }
  if (o.ok) o.detail = "D4, D6, D8 doubled; " + std::to_string(cyclic) + " cyclic cases single";
  return o;
}

Outcome lemma1() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& l : load(level_cases())) {
    const auto rep = lemma1_sweep(l.rs, l.data);
    if (!rep.ok) o.fail(name(l.c) + ": " + rep.failure);
    checks += rep.checks;
  }
  if (o.ok) o.detail = std::to_string(checks) + " generator checks";
  return o;
}

Integer abs_det(const IntegerMatrix& m) {
  Integer d = determinant(m);
  return d < 0 ? Integer(-d) : d;
}

Outcome solver_soundness() {
  Outcome o;
  std::size_t systems = 0;
  for (const auto& l : load(level_cases())) {
    const auto& g = l.data.group;
    if (g.order() != 2) continue;
    const CoboundarySolver solver(g);
    for (long k = 1; k <= 3; ++k) {
      const auto u3 = u_obstruction(l.rs, l.data, k);
      const long m = solver.modulus_for(u3).get_si();
      bool found = false;
      for (long x = 0; x < m && !found; ++x) {
        PhaseCochain c(2, 2);
        c.at({1, 1}) = Phase(Rational(x, m));
        found = coboundary_phase(g, c) == u3;
      }
      if (solver.solve(u3).has_value() != found) o.fail(name(l.c) + ": verdict differs at k=" + std::to_string(k));
      ++systems;
    }
  }
  std::mt19937 gen(4242);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  for (int t = 0; t < 1000; ++t) {
    IntegerMatrix a(dim(gen), dim(gen));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(gen);
    const auto s = smith_normal_form(a);
    const IntegerMatrix u = s.left();
    bool ok = u * a * s.right == s.diagonal && abs_det(u) == 1 && abs_det(s.right) == 1;
    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) ok = ok && (i == j || s.diagonal(i, j) == 0);
    for (std::size_t i = 0; i < n; ++i) {
      ok = ok && s.d(i) >= 0;
      if (i + 1 < n) ok = ok && (s.d(i) == 0 ? s.d(i + 1) == 0 : mod(s.d(i + 1), s.d(i)) == 0);
    }
    if (!ok) o.fail("SNF property fails on random matrix " + std::to_string(t));
  }
  if (o.ok) o.detail = std::to_string(systems) + " Z2 systems, 1000 random SNFs";
  return o;
}

Outcome robustness() {
  Outcome o;
  std::mt19937 gen(99);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::size_t shifts = 0;
  for (const auto& l : load(level_cases())) {
    const long k = minimal_level(l.rs, l.data).k_min;
    const std::size_t n = l.data.group.order();
    for (int t = 0; t < 10; ++t) {
      ETable e = l.data.etable;
      for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b)
          for (const auto& c : l.rs.coroots()) e.at(a, b) += Rational(coef(gen)) * c;
      const long k2 = minimal_level(l.rs, l.data, e).k_min;
      if (k2 != k) o.fail(name(l.c) + ": shifted k_min " + std::to_string(k2));
      ++shifts;
    }
  }
  if (o.ok) o.detail = std::to_string(shifts) + " shifted tables";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"level table reproduction", level_table},
      {"cocycle identities", cocycle_identities},
      {"associativity sweep", associativity},
      {"center-action geometry", geometry},
      {"solution class doubling", doubling},
      {"lemma 1 invariance sweep", lemma1},
      {"solver soundness", solver_soundness},
      {"coroot shift robustness", robustness},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu (%s): %s [%.2f s]\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), seconds_since(t0));
    failures += !o.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
