#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

namespace gerbe::cli {
namespace {

using nlohmann::json;

int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::D: return 3;
    case Family::E6: return 6;
    case Family::E7: return 7;
    default: return 2;
  }
}

std::string case_name(const CaseSpec& s) {
  if (s.family == Family::E6 || s.family == Family::E7) return to_string(s.family);
  return to_string(s.family) + std::to_string(s.rank);
}

std::string labels(const std::vector<std::string>& args) {
  std::string s;
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + args[i];
  return s;
}

void print_entries(std::ostream& out, const std::string& title, const std::vector<PhaseEntry>& es) {
  out << "  " << title << ":";
  if (es.empty()) out << " 0 everywhere";
  out << '\n';
  for (const auto& e : es) out << "    (" << labels(e.args) << ") = " << e.value << '\n';
}

struct Job {
  std::string text;
  json doc;
  int status = kOk;
};

// Runs fn over every case on up to `jobs` threads; results keep case order.
std::vector<Job> run_parallel(const std::vector<CaseSpec>& cases, int jobs,
                              const std::function<Job(const CaseSpec&)>& fn) {
  std::vector<Job> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cases.size();) {
      try {
        results[i] = fn(cases[i]);
      } catch (const std::exception& ex) {
        results[i].text = case_name(cases[i]) + " " + cases[i].subgroup + ": error: " + ex.what() + "\n";
        results[i].status = kVerificationFailed;
      }
    }
  };
  const auto n = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(n, cases.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

struct Options {
  std::string family;
  std::optional<int> rank;
  std::string subgroup = "full";
  std::optional<long> level;
  std::optional<int> max_rank;
  std::optional<int> cap;
  std::string format = "table";
  int jobs = 1;
  bool all = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

CaseSpec spec_from(const Options& o) {
  if (o.family.empty()) throw UsageError("--family is required (or use --all)");
  CaseSpec s;
  try {
    s.family = parse_family(o.family);
  } catch (const std::invalid_argument&) {
    throw ParseError("unknown family '" + o.family + "'", 0);
  }
  if (o.rank) s.rank = *o.rank;
  else if (s.family == Family::E6) s.rank = 6;
  else if (s.family == Family::E7) s.rank = 7;
  else throw UsageError("--rank is required for family " + o.family);
  if (s.rank > rank_cap(s.family, o.cap))
    throw UsageError("rank " + std::to_string(s.rank) + " exceeds the cap " +
                     std::to_string(rank_cap(s.family, o.cap)) + " for family " + o.family +
                     " (raise it with --rank-cap, at most 16)");
  s.subgroup = o.subgroup;
  resolve(s);  // validates rank and subgroup early
  return s;
}

Job levels_job(const CaseSpec& s) {
  Job j;
  const ReportDocument d = level_report(s);
  j.doc = d;
  std::ostringstream os;
  os << std::left << std::setw(5) << case_name(s) << ' ' << std::setw(10) << d.spec.subgroup
     << " k_min=" << *d.k_min << '\n';
  j.text = os.str();
  return j;
}

Job verify_job(const CaseSpec& s) {
  Job j;
  const VerifyOutcome v = verify_case(s);
  std::ostringstream os;
  os << case_name(s) << ' ' << s.subgroup << ": " << (v.ok ? "PASS" : "FAIL");
  if (!v.ok) os << " -- " << v.failure;
  os << '\n';
  for (const auto& n : v.notes) os << "  note: " << n << '\n';
  j.text = os.str();
  j.status = v.ok ? kOk : kVerificationFailed;
  j.doc = {{"case", {{"family", to_string(s.family)}, {"rank", s.rank}, {"subgroup", s.subgroup}}},
           {"pass", v.ok},
           {"verification",
            {{"delta_e", v.flags.delta_e}, {"lemma1", v.flags.lemma1}, {"lemma2", v.flags.lemma2},
             {"rtc", v.flags.rtc}, {"reflection_words", v.flags.reflection_words}}},
           {"notes", v.notes}};
  if (!v.ok) j.doc["failure"] = v.failure;
  return j;
}

std::string solve_text(const ReportDocument& d) {
  std::ostringstream os;
  os << case_name(d.spec) << ' ' << d.spec.subgroup << " at level " << *d.level << '\n';
  for (const auto& t : d.u_tables) print_entries(os, "U", t.entries);
  if (*d.solvable) {
    os << "  solvable: yes (values in (1/" << *d.modulus << ")Z/Z)\n";
    print_entries(os, "u", *d.u_solution);
    os << "  solution classes: " << *d.solution_class_count << '\n';
    for (std::size_t i = 0; i < d.class_representatives.size(); ++i)
      print_entries(os, "class " + std::to_string(i + 1), d.class_representatives[i]);
  } else {
    os << "  solvable: no\n";
  }
  for (const auto& n : d.notes) os << "  note: " << n << '\n';
  return os.str();
}

void emit(std::ostream& out, const Options& o, const std::vector<Job>& jobs, bool single) {
  if (o.format == "json") {
    if (single) {
      out << jobs.front().doc.dump(2) << '\n';
    } else {
      json a = json::array();
      for (const auto& j : jobs) a.push_back(j.doc);
      out << a.dump(2) << '\n';
    }
    return;
  }
  for (const auto& j : jobs) out << j.text;
}

int worst(const std::vector<Job>& jobs) {
  int s = kOk;
  for (const auto& j : jobs) s = std::max(s, j.status);
  return s;
}

std::vector<CaseSpec> cases_for(const Options& o) {
  if (o.all) return sweep_cases(o.max_rank.value_or(kHardRankCap), o.cap);
  return {spec_from(o)};
}

int cmd_levels(const Options& o, std::ostream& out) {
  const auto cases = cases_for(o);
  const auto jobs = run_parallel(cases, o.jobs, levels_job);
  emit(out, o, jobs, !o.all);
  return worst(jobs);
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto cases = cases_for(o);
  const auto jobs = run_parallel(cases, o.jobs, verify_job);
  emit(out, o, jobs, !o.all);
  return worst(jobs);
}

int cmd_solve(const Options& o, std::ostream& out) {
  if (o.all) throw UsageError("solve takes a single case, not --all");
  if (o.level && *o.level < 1) throw UsageError("--level must be at least 1");
  const CaseSpec s = spec_from(o);
  const ReportDocument d = solve_report(s, o.level);
  if (o.format == "json") out << json(d).dump(2) << '\n';
  else out << solve_text(d);
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const int n = o.max_rank.value_or(12);
  if (n > 12) throw UsageError("table: --max-rank must be at most 12");
  const auto cases = sweep_cases(n, o.cap);
  const auto jobs = run_parallel(cases, o.jobs, [](const CaseSpec& s) {
    Job j;
    const ReportDocument d = level_report(s);
    j.doc = {{"family", to_string(s.family)}, {"rank", s.rank}, {"subgroup", d.spec.subgroup},
             {"k_min", *d.k_min}, {"classes", *d.solution_class_count}};
    std::ostringstream os;
    os << std::left << std::setw(7) << to_string(s.family) << std::setw(6) << s.rank << std::setw(11)
       << d.spec.subgroup << std::setw(7) << *d.k_min << *d.solution_class_count << '\n';
    j.text = os.str();
    return j;
  });
  if (o.format == "json") {
    json a = json::array();
    for (const auto& j : jobs) a.push_back(j.doc);
    out << a.dump(2) << '\n';
  } else {
    out << std::left << std::setw(7) << "family" << std::setw(6) << "rank" << std::setw(11)
        << "subgroup" << std::setw(7) << "k_min" << "classes" << '\n';
    for (const auto& j : jobs) out << j.text;
  }
  return worst(jobs);
}

}  // namespace

int rank_cap(Family f, std::optional<int> override_cap) {
  if (override_cap) return std::min(*override_cap, kHardRankCap);
  switch (f) {
    case Family::A: return 11;
    case Family::E6: return 6;
    case Family::E7: return 7;
    default: return 9;
  }
}

std::vector<CaseSpec> sweep_cases(int max_rank, std::optional<int> override_cap) {
  std::vector<CaseSpec> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E6, Family::E7}) {
    int lo = min_rank(f), hi = std::min(max_rank, rank_cap(f, override_cap));
    if (f == Family::E6 || f == Family::E7) hi = max_rank >= lo ? lo : lo - 1;
    for (int r = lo; r <= hi; ++r) {
      const auto rs = RootSystem::build(f, r);
      for (const auto& sg : subgroups_of(center_of(rs)))
        if (sg.order() > 1) out.push_back({f, r, sg.label()});
    }
  }
  return out;
}

ResolvedCase resolve(const CaseSpec& spec) {
  RootSystem rs = RootSystem::build(spec.family, spec.rank);
  const CenterGroup full = center_of(rs);
  const CenterGroup z = subgroup_by_label(full, spec.subgroup);
  CenterData data = center_data(rs, z);
  return {std::move(rs), std::move(data)};
}

ReportDocument level_report(const CaseSpec& spec) {
  const auto rc = resolve(spec);
  ReportDocument d = describe_case(rc.rs, rc.data);
  const LevelReport rep = minimal_level(rc.rs, rc.data);
  d.k_min = rep.k_min;
  d.trivial_at = rep.trivial_at;
  d.u_tables.push_back({rep.k_min, sparse_entries(rc.data.group, u_obstruction(rc.rs, rc.data, rep.k_min))});
  d.level = rep.k_min;
  d.solvable = true;
  d.u_solution = sparse_entries(rc.data.group, rep.u);
  d.solution_class_count = rep.class_count;
  for (const auto& r : rep.representatives) d.class_representatives.push_back(sparse_entries(rc.data.group, r));
  return d;
}

ReportDocument solve_report(const CaseSpec& spec, std::optional<long> level) {
  const auto rc = resolve(spec);
  const auto& z = rc.data.group;
  ReportDocument d = describe_case(rc.rs, rc.data);
  const LevelReport rep = minimal_level(rc.rs, rc.data);
  d.k_min = rep.k_min;
  d.trivial_at = rep.trivial_at;
  const long k = level.value_or(rep.k_min);
  d.level = k;
  const PhaseCochain u3 = u_obstruction(rc.rs, rc.data, k);
  d.u_tables.push_back({k, sparse_entries(z, u3)});
  const CoboundarySolver solver(z);
  const Integer m = solver.modulus_for(u3);
  const auto sol = solver.solve(u3);
  d.solvable = sol.has_value();
  d.modulus = m.get_str();
  if (sol) {
    d.u_solution = sparse_entries(z, sol->u);
    const auto classes = solution_classes(solver, u3);
    d.solution_class_count = classes.count;
    for (const auto& r : classes.representatives) d.class_representatives.push_back(sparse_entries(z, r));
    if (classes.count > 1)
      d.notes.push_back("solutions form " + std::to_string(classes.count) +
                        " classes modulo coboundaries (a torsor over the 2-cocycle classes)");
  } else {
    d.notes.push_back("no solution: delta u = U has no solution modulo " + m.get_str() +
                      ", so U is cohomologically nontrivial at level " + std::to_string(k));
  }
  if (u3.is_zero()) d.notes.push_back("trivial cocycle");
  return d;
}

VerifyOutcome verify_case(const CaseSpec& spec) {
  VerifyOutcome v;
  const auto rc = resolve(spec);
  const auto& rs = rc.rs;
  const auto& data = rc.data;
  auto fail = [&](const std::string& what) {
    if (v.ok) v.failure = what;
    v.ok = false;
  };

  try {
    delta_e(rs, data.group, data.action, data.etable);
    v.flags.delta_e = true;
  } catch (const CocycleError& e) {
    fail(e.what());
  }

  v.flags.lemma2 = true;
  for (long k = 1; k <= 3; ++k) {
    const auto forms = u_obstruction_forms(rs, data, data.etable, k);
    if (forms.first != forms.second) {
      v.flags.lemma2 = false;
      fail("the two forms of U disagree at level " + std::to_string(k));
    } else if (!is_cocycle(data.group, forms.second)) {
      v.flags.lemma2 = false;
      fail("U is not a cocycle at level " + std::to_string(k));
    }
  }

  const auto l1 = lemma1_sweep(rs, data);
  v.flags.lemma1 = l1.ok;
  if (!l1.ok) fail("lemma 1: " + l1.failure);

  const CenterGroup full = center_of(rs);
  const CenterAction full_act = action_of(rs, full);
  v.flags.reflection_words = true;
  for (std::size_t z = 0; z < full.order(); ++z)
    if (!reflection_word_check(rs, full, full_act, z)) {
      v.flags.reflection_words = false;
      fail("reflection word for " + full.element(z).label + " does not reproduce W_z");
    }
  if (!short_reflection_roots(rs).empty() && !short_reflection_check(rs, full, full_act)) {
    v.flags.reflection_words = false;
    fail("non-simple reflection factorization does not reproduce W_z");
  }

  const LevelReport rep = minimal_level(rs, data);
  const auto fam = lemma3_extend(rs, data, rep.k_min, rep.u);
  const auto rtc = verify_rtc(rs, data, rep.k_min, fam);
  v.flags.rtc = rtc.ok;
  if (!rtc.ok) {
    const auto& c = *rtc.counterexample;
    const auto& g = data.group;
    fail("associativity fails at (i,j,k,l) = (" + std::to_string(c.i) + "," + std::to_string(c.j) + "," +
         std::to_string(c.k) + "," + std::to_string(c.l) + "), (z,z',z'') = (" + g.element(c.a).label +
         "," + g.element(c.b).label + "," + g.element(c.c).label + "): " + c.lhs.str() +
         " != " + c.rhs.str());
  }

  bool etable_zero = true;
  for (std::size_t a = 0; a < data.group.order(); ++a)
    for (std::size_t b = 0; b < data.group.order(); ++b) etable_zero = etable_zero && data.etable(a, b).is_zero();
  if (etable_zero) v.notes.push_back("trivial cocycle");
  v.notes.push_back("k_min = " + std::to_string(rep.k_min) + "; " + std::to_string(rtc.checks) +
                    " associativity checks");
  return v;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Basic gerbe levels over G/Z: obstruction cocycles and minimal levels"};
  app.name("gerbe");
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_spec, bool with_sweep) {
    if (with_spec) {
      sub->add_option("--family", o.family, "A, B, C, D, E6 or E7");
      sub->add_option("--rank", o.rank, "Rank (implied for E6, E7)");
      sub->add_option("--subgroup", o.subgroup,
                      "full | trivial | cyclic:N | Z<n> | Z2xZ2 | z1 | z2 | z1z2");
    }
    if (with_sweep) {
      sub->add_flag("--all", o.all, "Every family, rank and nontrivial subgroup");
    }
    sub->add_option("--max-rank", o.max_rank, "Largest rank in sweeps")->check(CLI::PositiveNumber);
    sub->add_option("--rank-cap", o.cap, "Raise the default rank caps (at most 16)")
        ->check(CLI::Range(1, kHardRankCap));
    sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--jobs", o.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  };
  auto* levels = app.add_subcommand("levels", "Minimal level per case");
  add_common(levels, true, true);
  auto* verify = app.add_subcommand("verify", "Run every identity check for a case");
  add_common(verify, true, true);
  auto* solve = app.add_subcommand("solve", "Solve delta u = U at a level");
  add_common(solve, true, false);
  solve->add_option("--level", o.level, "Level k (default: minimal level)");
  auto* table = app.add_subcommand("table", "Consolidated level table");
  add_common(table, false, false);

  std::vector<std::string> argv_store{"gerbe"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*levels) return cmd_levels(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*solve) return cmd_solve(o, out);
    if (*table) return cmd_table(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (at position " << e.position() << ")\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace gerbe::cli
