#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"

namespace gerbe::cli {
namespace {

using nlohmann::json;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

TEST(Cli, Levels) {
  EXPECT_EQ(run_json({"levels", "--family", "E7"})["k_min"], 2);
  EXPECT_EQ(run_json({"levels", "--family", "B", "--rank", "4"})["k_min"], 1);
  const auto a5 = run_json({"levels", "--family", "A", "--rank", "5", "--subgroup", "cyclic:2"});
  EXPECT_EQ(a5["k_min"], 2);
  EXPECT_EQ(a5["schema_version"], "gerbe-levels/1");
  EXPECT_EQ(a5["case"]["subgroup"], "cyclic:2");
}

TEST(Cli, Verify) {
  auto r = run({"verify", "--family", "D", "--rank", "8", "--subgroup", "full"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  r = run({"verify", "--family", "E6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("trivial cocycle"), std::string::npos);
  EXPECT_EQ(run({"verify", "--family", "A", "--rank", "2"}).code, 0);
}

TEST(Cli, SolveD8) {
  const auto j = run_json({"solve", "--family", "D", "--rank", "8", "--subgroup", "Z2xZ2", "--level", "1"});
  EXPECT_TRUE(j["solvable"].get<bool>());
  EXPECT_EQ(j["solution_class_count"], 2);
  const std::set<std::vector<std::string>> pairs = {
      {"z2", "z1"}, {"z2", "z1z2"}, {"z1z2", "z1"}, {"z1z2", "z1z2"}};
  std::set<std::string> values;
  for (const auto& rep : j["class_representatives"]) {
    std::set<std::vector<std::string>> seen;
    for (const auto& e : rep) {
      seen.insert(e["args"].get<std::vector<std::string>>());
      values.insert(e["value"].get<std::string>());
    }
    EXPECT_EQ(seen, pairs);
  }
  EXPECT_EQ(values, (std::set<std::string>{"1/4", "3/4"}));
}

TEST(Cli, SolveNoSolution) {
  const auto r = run({"solve", "--family", "C", "--rank", "3", "--level", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("solvable: no"), std::string::npos);
  const auto j = run_json({"solve", "--family", "C", "--rank", "3", "--level", "1"});
  EXPECT_FALSE(j["solvable"].get<bool>());
  EXPECT_FALSE(j.contains("u_solution"));
}

TEST(Cli, SolveTrivialSolution) {
  const auto j = run_json({"solve", "--family", "A", "--rank", "1", "--level", "2"});
  EXPECT_TRUE(j["solvable"].get<bool>());
  EXPECT_TRUE(j["u_solution"].empty());
}

TEST(Cli, Table) {
  const auto j = run_json({"table", "--max-rank", "8"});
  auto row = [&](const std::string& f, int r, const std::string& s) {
    for (const auto& x : j)
      if (x["family"] == f && x["rank"] == r && x["subgroup"] == s) return x;
    ADD_FAILURE() << f << r << " " << s;
    return json();
  };
  EXPECT_EQ(row("D", 8, "Z2xZ2")["k_min"], 1);
  EXPECT_EQ(row("D", 8, "Z2xZ2")["classes"], 2);
  EXPECT_EQ(row("C", 4, "Z2")["k_min"], 1);
  EXPECT_EQ(row("E6", 6, "Z3")["k_min"], 1);
  EXPECT_EQ(run({"table", "--max-rank", "13"}).code, 2);
}

TEST(Cli, ParallelMatchesSerial) {
  const auto a = run({"levels", "--all", "--max-rank", "6"});
  const auto b = run({"levels", "--all", "--max-rank", "6", "--jobs", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"levels", "--family", "F4", "--rank", "4"}).code, 2);
  EXPECT_EQ(run({"levels", "--family", "A"}).code, 2);
  EXPECT_EQ(run({"levels", "--family", "A", "--rank", "12"}).code, 2);
  EXPECT_EQ(run({"levels", "--family", "A", "--rank", "12", "--rank-cap", "12"}).code, 0);
  EXPECT_EQ(run({"levels", "--family", "A", "--rank", "3", "--subgroup", "cyclic:3"}).code, 2);
  EXPECT_EQ(run({"levels", "--family", "B", "--rank", "3", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"solve", "--family", "B", "--rank", "3", "--level", "0"}).code, 2);
  const auto r = run({"levels", "--family", "A", "--rank", "3", "--subgroup", "cyclic:x"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("position 7"), std::string::npos);
}

TEST(Report, JsonRoundTrip) {
  for (const auto& spec : {CaseSpec{Family::D, 8, "Z2xZ2"}, CaseSpec{Family::E7, 7, "full"},
                           CaseSpec{Family::A, 5, "cyclic:3"}}) {
    const ReportDocument d = solve_report(spec, std::nullopt);
    const json j = d;
    EXPECT_EQ(j.get<ReportDocument>(), d);
    EXPECT_EQ(json::parse(j.dump()).get<ReportDocument>(), d);
  }
  ReportDocument v = level_report({Family::C, 3, "full"});
  v.verification = Verification{true, true, true, true, false};
  EXPECT_EQ(json(v).get<ReportDocument>(), v);
}

TEST(Report, RejectsBadInput) {
  json j = level_report({Family::B, 2, "full"});
  j["schema_version"] = "gerbe-levels/0";
  EXPECT_THROW(j.get<ReportDocument>(), std::invalid_argument);
  j = solve_report({Family::C, 3, "full"}, 1);
  j["U_tables"][0]["entries"][0]["value"] = "0.5";
  EXPECT_THROW(j.get<ReportDocument>(), std::invalid_argument);
}

TEST(Sweep, CaseList) {
  const auto cases = sweep_cases(11, std::nullopt);
  for (const auto& c : cases) EXPECT_NE(c.subgroup, "trivial");
  EXPECT_EQ(std::count_if(cases.begin(), cases.end(), [](const CaseSpec& c) { return c.family == Family::E7; }), 1);
  EXPECT_EQ(std::count_if(cases.begin(), cases.end(), [](const CaseSpec& c) { return c.family == Family::B; }), 8);
  EXPECT_EQ(rank_cap(Family::A, std::nullopt), 11);
  EXPECT_EQ(rank_cap(Family::D, std::nullopt), 9);
  EXPECT_EQ(rank_cap(Family::D, 20), 16);
}

}  // namespace
}  // namespace gerbe::cli
