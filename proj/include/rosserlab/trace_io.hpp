#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "rosserlab/construction.hpp"
#include "rosserlab/harness.hpp"
#include "rosserlab/scenario.hpp"

namespace rosserlab {

// A trace file carries the construction run together with the scenario it
// came from, so verification needs nothing else.
struct TraceDocument {
  ConstructionTrace trace;
  Scenario scenario;
  std::string scenario_id;
};

nlohmann::ordered_json trace_to_json(const TraceDocument& doc);
TraceDocument trace_from_json(const nlohmann::json& j);
void save_trace(const TraceDocument& doc, const std::string& path);
TraceDocument load_trace(const std::string& path);

nlohmann::ordered_json report_to_json(const CheckReport& r);

}  // namespace rosserlab
