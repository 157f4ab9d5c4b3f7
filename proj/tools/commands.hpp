#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace gerbe::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

inline constexpr int kHardRankCap = 16;

/// Largest rank accepted for a family; the override (<= 16) raises the
/// default caps A <= 11 and B, C, D <= 9.
int rank_cap(Family f, std::optional<int> override_cap);

/// Every (family, rank, nontrivial subgroup) with rank <= max_rank and the cap.
std::vector<CaseSpec> sweep_cases(int max_rank, std::optional<int> override_cap);

struct ResolvedCase {
  RootSystem rs;
  CenterData data;
};
/// Throws ParseError / std::invalid_argument for bad specs.
ResolvedCase resolve(const CaseSpec& spec);

ReportDocument level_report(const CaseSpec& spec);
ReportDocument solve_report(const CaseSpec& spec, std::optional<long> level);

struct VerifyOutcome {
  bool ok = true;
  Verification flags;
  std::vector<std::string> notes;
  std::string failure;
};
VerifyOutcome verify_case(const CaseSpec& spec);

/// Entry point; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gerbe::cli
