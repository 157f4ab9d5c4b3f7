#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gerbe/cohomology.hpp"
#include "json.hpp"

namespace gerbe::cli {

inline constexpr const char* kSchemaVersion = "gerbe-levels/1";

struct CaseSpec {
  Family family = Family::A;
  int rank = 1;
  std::string subgroup = "full";
  friend bool operator==(const CaseSpec&, const CaseSpec&) = default;
};

/// One nonzero cochain entry: argument labels and a "p/q" phase.
struct PhaseEntry {
  std::vector<std::string> args;
  std::string value;
  friend bool operator==(const PhaseEntry&, const PhaseEntry&) = default;
};

/// One nonzero vector-valued entry, coordinates as "p/q".
struct VectorEntry {
  std::vector<std::string> args;
  std::vector<std::string> value;
  friend bool operator==(const VectorEntry&, const VectorEntry&) = default;
};

struct LevelTable {
  long level = 0;
  std::vector<PhaseEntry> entries;
  friend bool operator==(const LevelTable&, const LevelTable&) = default;
};

struct Verification {
  bool delta_e = false;
  bool lemma1 = false;
  bool lemma2 = false;
  bool rtc = false;
  bool reflection_words = false;
  friend bool operator==(const Verification&, const Verification&) = default;
};

struct ReportDocument {
  std::string schema_version = kSchemaVersion;
  CaseSpec spec;
  std::vector<std::string> elements;
  std::vector<VectorEntry> theta;
  std::vector<std::pair<std::string, std::vector<int>>> node_permutations;
  std::vector<VectorEntry> e_table;
  std::vector<LevelTable> u_tables;
  std::optional<long> k_min;
  std::vector<bool> trivial_at;
  std::optional<long> level;
  std::optional<bool> solvable;
  std::optional<std::string> modulus;
  std::optional<std::vector<PhaseEntry>> u_solution;
  std::optional<std::size_t> solution_class_count;
  std::vector<std::vector<PhaseEntry>> class_representatives;
  std::optional<Verification> verification;
  std::vector<std::string> notes;
  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

void to_json(nlohmann::json& j, const ReportDocument& d);
void from_json(const nlohmann::json& j, ReportDocument& d);

std::vector<PhaseEntry> sparse_entries(const CenterGroup& z, const PhaseCochain& c);
std::vector<VectorEntry> sparse_entries(const CenterGroup& z, const ETable& e);
std::vector<std::string> coords(const RationalVector& v);

/// Case header fields: elements, theta, node permutations, e-table.
ReportDocument describe_case(const RootSystem& rs, const CenterData& data);

}  // namespace gerbe::cli
