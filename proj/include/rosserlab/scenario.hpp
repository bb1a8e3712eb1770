#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "rosserlab/proof_stream.hpp"

namespace rosserlab {

// A scenario file: scripted events, an optional contradiction injection,
// optional enumerator axioms whose closure stream is appended after the
// scripted positions, and the run horizon.
struct Scenario {
  std::vector<std::pair<std::uint64_t, Formula>> events;
  std::optional<std::pair<std::uint64_t, Formula>> inject;
  std::vector<Formula> enumerator_axioms;
  std::uint64_t horizon = 1;
};

Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::ordered_json scenario_to_json(const Scenario& sc);
Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& sc, const std::string& path);

ProofSource build_source(const Scenario& sc);

}  // namespace rosserlab
