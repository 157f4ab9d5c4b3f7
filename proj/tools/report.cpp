#include "report.hpp"

#include <stdexcept>

namespace gerbe::cli {

using nlohmann::json;

namespace {

json entries_json(const std::vector<PhaseEntry>& es) {
  json a = json::array();
  for (const auto& e : es) a.push_back({{"args", e.args}, {"value", e.value}});
  return a;
}

std::vector<PhaseEntry> entries_from(const json& a) {
  std::vector<PhaseEntry> out;
  for (const auto& e : a) {
    PhaseEntry p{e.at("args").get<std::vector<std::string>>(), e.at("value").get<std::string>()};
    Rational::parse(p.value);
    out.push_back(std::move(p));
  }
  return out;
}

json vectors_json(const std::vector<VectorEntry>& es) {
  json a = json::array();
  for (const auto& e : es) a.push_back({{"args", e.args}, {"value", e.value}});
  return a;
}

std::vector<VectorEntry> vectors_from(const json& a) {
  std::vector<VectorEntry> out;
  for (const auto& e : a)
    out.push_back({e.at("args").get<std::vector<std::string>>(),
                   e.at("value").get<std::vector<std::string>>()});
  return out;
}

}  // namespace

void to_json(json& j, const ReportDocument& d) {
  j = json::object();
  j["schema_version"] = d.schema_version;
  j["case"] = {{"family", to_string(d.spec.family)}, {"rank", d.spec.rank}, {"subgroup", d.spec.subgroup}};
  j["elements"] = d.elements;
  j["theta"] = vectors_json(d.theta);
  json perms = json::array();
  for (const auto& [label, p] : d.node_permutations) perms.push_back({{"element", label}, {"image", p}});
  j["node_permutations"] = perms;
  j["e_table"] = vectors_json(d.e_table);
  json ut = json::array();
  for (const auto& t : d.u_tables) ut.push_back({{"level", t.level}, {"entries", entries_json(t.entries)}});
  j["U_tables"] = ut;
  if (d.k_min) j["k_min"] = *d.k_min;
  j["trivial_at"] = d.trivial_at;
  if (d.level) j["level"] = *d.level;
  if (d.solvable) j["solvable"] = *d.solvable;
  if (d.modulus) j["modulus"] = *d.modulus;
  if (d.u_solution) j["u_solution"] = entries_json(*d.u_solution);
  if (d.solution_class_count) j["solution_class_count"] = *d.solution_class_count;
  json reps = json::array();
  for (const auto& r : d.class_representatives) reps.push_back(entries_json(r));
  j["class_representatives"] = reps;
  if (d.verification) {
    const auto& v = *d.verification;
    j["verification"] = {{"delta_e", v.delta_e}, {"lemma1", v.lemma1}, {"lemma2", v.lemma2},
                         {"rtc", v.rtc}, {"reflection_words", v.reflection_words}};
  }
  j["notes"] = d.notes;
}

void from_json(const json& j, ReportDocument& d) {
  d = ReportDocument{};
  d.schema_version = j.at("schema_version").get<std::string>();
  if (d.schema_version != kSchemaVersion)
    throw std::invalid_argument("unsupported schema version '" + d.schema_version + "'");
  const auto& c = j.at("case");
  d.spec.family = parse_family(c.at("family").get<std::string>());
  d.spec.rank = c.at("rank").get<int>();
  d.spec.subgroup = c.at("subgroup").get<std::string>();
  d.elements = j.at("elements").get<std::vector<std::string>>();
  d.theta = vectors_from(j.at("theta"));
  for (const auto& p : j.at("node_permutations"))
    d.node_permutations.emplace_back(p.at("element").get<std::string>(),
                                     p.at("image").get<std::vector<int>>());
  d.e_table = vectors_from(j.at("e_table"));
  for (const auto& t : j.at("U_tables"))
    d.u_tables.push_back({t.at("level").get<long>(), entries_from(t.at("entries"))});
  if (j.contains("k_min")) d.k_min = j["k_min"].get<long>();
  d.trivial_at = j.at("trivial_at").get<std::vector<bool>>();
  if (j.contains("level")) d.level = j["level"].get<long>();
  if (j.contains("solvable")) d.solvable = j["solvable"].get<bool>();
  if (j.contains("modulus")) d.modulus = j["modulus"].get<std::string>();
  if (j.contains("u_solution")) d.u_solution = entries_from(j["u_solution"]);
  if (j.contains("solution_class_count"))
    d.solution_class_count = j["solution_class_count"].get<std::size_t>();
  for (const auto& r : j.at("class_representatives")) d.class_representatives.push_back(entries_from(r));
  if (j.contains("verification")) {
    const auto& v = j["verification"];
    d.verification = Verification{v.at("delta_e").get<bool>(), v.at("lemma1").get<bool>(),
                                  v.at("lemma2").get<bool>(), v.at("rtc").get<bool>(),
                                  v.at("reflection_words").get<bool>()};
  }
  d.notes = j.at("notes").get<std::vector<std::string>>();
}

std::vector<std::string> coords(const RationalVector& v) {
  std::vector<std::string> out;
  for (const auto& x : v.coords()) out.push_back(x.str());
  return out;
}

std::vector<PhaseEntry> sparse_entries(const CenterGroup& z, const PhaseCochain& c) {
  std::vector<PhaseEntry> out;
  const std::size_t n = z.order();
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    if (c.values()[idx].is_zero()) continue;
    std::vector<std::string> args(c.degree());
    std::size_t x = idx;
    for (std::size_t d = c.degree(); d-- > 0; x /= n) args[d] = z.element(x % n).label;
    out.push_back({std::move(args), c.values()[idx].str()});
  }
  return out;
}

std::vector<VectorEntry> sparse_entries(const CenterGroup& z, const ETable& e) {
  std::vector<VectorEntry> out;
  for (std::size_t a = 0; a < z.order(); ++a)
    for (std::size_t b = 0; b < z.order(); ++b)
      if (!e(a, b).is_zero())
        out.push_back({{z.element(a).label, z.element(b).label}, coords(e(a, b))});
  return out;
}

ReportDocument describe_case(const RootSystem& rs, const CenterData& data) {
  ReportDocument d;
  d.spec = {rs.family(), rs.rank(), data.group.label()};
  for (std::size_t a = 0; a < data.group.order(); ++a) {
    const auto& el = data.group.element(a);
    d.elements.push_back(el.label);
    d.theta.push_back({{el.label}, coords(el.theta)});
    std::vector<int> p;
    for (auto x : data.action.node_perm(a)) p.push_back(static_cast<int>(x));
    d.node_permutations.emplace_back(el.label, p);
  }
  d.e_table = sparse_entries(data.group, data.etable);
  return d;
}

}  // namespace gerbe::cli
