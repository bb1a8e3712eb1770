#include "rosserlab/scenario.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "rosserlab/errors.hpp"
#include "rosserlab/syntax.hpp"

namespace rosserlab {

using nlohmann::json;
using nlohmann::ordered_json;

Scenario scenario_from_json(const json& j) {
  Scenario sc;
  try {
    if (j.contains("events"))
      for (const auto& e : j.at("events"))
        sc.events.emplace_back(e.at("y").get<std::uint64_t>(),
                               parse_formula(e.at("formula").get<std::string>()));
    if (j.contains("inject") && !j.at("inject").is_null()) {
      const auto& in = j.at("inject");
      sc.inject = {in.at("at").get<std::uint64_t>(),
                   parse_formula(in.at("formula").get<std::string>())};
    }
    if (j.contains("enumerator_axioms"))
      for (const auto& a : j.at("enumerator_axioms"))
        sc.enumerator_axioms.push_back(parse_formula(a.get<std::string>()));
    sc.horizon = j.at("horizon").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("malformed scenario: ") + e.what());
  } catch (const ParseError& e) {
    throw ScenarioError(std::string("scenario formula does not parse: ") + e.what());
  }
  if (sc.horizon < 1) throw ScenarioError("scenario horizon must be >= 1");
  return sc;
}

ordered_json scenario_to_json(const Scenario& sc) {
  ordered_json j;
  j["events"] = ordered_json::array();
  for (const auto& [y, f] : sc.events)
    j["events"].push_back(ordered_json{{"y", y}, {"formula", print_formula(f)}});
  if (sc.inject)
    j["inject"] = ordered_json{{"at", sc.inject->first},
                               {"formula", print_formula(sc.inject->second)}};
  if (!sc.enumerator_axioms.empty()) {
    j["enumerator_axioms"] = ordered_json::array();
    for (const auto& a : sc.enumerator_axioms) j["enumerator_axioms"].push_back(print_formula(a));
  }
  j["horizon"] = sc.horizon;
  return j;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot read scenario file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("scenario is not valid JSON: ") + e.what());
  }
  return scenario_from_json(j);
}

void save_scenario(const Scenario& sc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ScenarioError("cannot write scenario file: " + path);
  out << scenario_to_json(sc).dump(2) << "\n";
}

ProofSource build_source(const Scenario& sc) {
  ProofSource s = scripted_source(sc.events);
  if (sc.inject) s = inject_contradiction(s, sc.inject->first, sc.inject->second);
  if (!sc.enumerator_axioms.empty()) {
    std::uint64_t base = 0;
    for (const auto& [y, f] : s.entries()) base = std::max(base, y + 1);
    EnumeratorOptions opts;
    opts.first_position = base;
    ProofSource en = axiom_enumerator_source(sc.enumerator_axioms, opts);
    std::map<std::uint64_t, Formula> merged = s.entries();
    for (const auto& [y, f] : en.entries()) merged.emplace(y, f);
    s = ProofSource(std::move(merged), s.descriptor() + "+enumerator");
  }
  return s;
}

}  // namespace rosserlab
