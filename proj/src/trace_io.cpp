#include "rosserlab/trace_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "rosserlab/errors.hpp"
#include "rosserlab/numbering.hpp"
#include "rosserlab/syntax.hpp"

namespace rosserlab {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json trace_to_json(const TraceDocument& doc) {
  const ConstructionTrace& t = doc.trace;
  ordered_json j;
  j["kind"] = to_string(t.kind);
  j["scenario_id"] = doc.scenario_id;
  j["horizon"] = t.horizon;
  j["mode"] = t.mode == Mode::Procedure1 ? "procedure1" : "procedure2";
  j["switch_point"] = t.switch_point ? ordered_json(*t.switch_point) : ordered_json(nullptr);
  j["order"] = t.order == LeastModelOrder::Standard ? "standard" : "reversed";
  ordered_json outs = ordered_json::array();
  for (const auto& o : t.outputs) outs.push_back(o ? ordered_json(print_formula(*o))
                                                   : ordered_json(nullptr));
  j["outputs"] = std::move(outs);
  if (t.model) {
    ordered_json v = ordered_json::array();
    for (std::size_t i = 0; i < t.model->v.domain().size(); ++i)
      v.push_back(ordered_json::array(
          {t.model->v.domain()[i].code().str(), t.model->v.value_at(i)}));
    j["model"] = ordered_json{{"n", t.model->n.str()}, {"v", std::move(v)}};
  } else {
    j["model"] = nullptr;
  }
  if (t.bell) {
    j["bell"] = ordered_json{{"stage", t.bell->stage},
                             {"condition", t.bell->condition},
                             {"witness", print_formula(t.bell->witness)}};
  } else {
    j["bell"] = nullptr;
  }
  if (t.switch_point && t.kind == ConstructionKind::G3) {
    ordered_json xs = ordered_json::array();
    for (const auto& f : t.closure_snapshot) xs.push_back(print_formula(f));
    j["closure_snapshot"] = std::move(xs);
  } else {
    j["closure_snapshot"] = nullptr;
  }
  j["scenario"] = scenario_to_json(doc.scenario);
  return j;
}

namespace {

Code code_from_string(const std::string& s) {
  try {
    return Code(BigNat(s));
  } catch (const std::exception&) {
    throw ScenarioError("trace: bad code literal '" + s + "'");
  }
}

}  // namespace

TraceDocument trace_from_json(const json& j) {
  TraceDocument doc;
  ConstructionTrace& t = doc.trace;
  try {
    auto kind = construction_from_string(j.at("kind").get<std::string>());
    if (!kind) throw ScenarioError("trace: unknown construction kind");
    t.kind = *kind;
    doc.scenario_id = j.value("scenario_id", "");
    t.horizon = j.at("horizon").get<std::uint64_t>();
    t.mode = j.at("mode").get<std::string>() == "procedure2" ? Mode::Procedure2 : Mode::Procedure1;
    if (!j.at("switch_point").is_null()) t.switch_point = j.at("switch_point").get<std::uint64_t>();
    t.order = j.value("order", "standard") == "reversed" ? LeastModelOrder::Reversed
                                                         : LeastModelOrder::Standard;
    for (const auto& o : j.at("outputs")) {
      if (o.is_null())
        t.outputs.push_back(std::nullopt);
      else
        t.outputs.push_back(parse_formula(o.get<std::string>()));
    }
    if (t.outputs.size() != t.horizon) throw ScenarioError("trace: outputs/horizon mismatch");
    if (!j.at("model").is_null()) {
      Code n = code_from_string(j.at("model").at("n").get<std::string>());
      std::vector<Formula> domain = f_set(n);
      const auto& pairs = j.at("model").at("v");
      if (pairs.size() != domain.size())
        throw ScenarioError("trace: model does not cover F_n exactly");
      std::vector<std::uint8_t> bits(domain.size());
      for (std::size_t i = 0; i < domain.size(); ++i) {
        Code c = code_from_string(pairs[i][0].get<std::string>());
        if (!(c == domain[i].code()))
          throw ScenarioError("trace: model domain mismatch at index " + std::to_string(i));
        int b = pairs[i][1].get<int>();
        if (b != 0 && b != 1) throw ScenarioError("trace: model bit out of range");
        bits[i] = static_cast<std::uint8_t>(b);
      }
      t.model = ModelData{n, TruthAssignment(n, std::move(domain), std::move(bits))};
    }
    if (!j.at("bell").is_null()) {
      const auto& b = j.at("bell");
      t.bell = BellRecord{b.at("stage").get<std::uint64_t>(), b.at("condition").get<int>(),
                          parse_formula(b.at("witness").get<std::string>())};
    }
    if (!j.at("closure_snapshot").is_null())
      for (const auto& x : j.at("closure_snapshot"))
        t.closure_snapshot.push_back(parse_formula(x.get<std::string>()));
    doc.scenario = scenario_from_json(j.at("scenario"));
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("malformed trace: ") + e.what());
  } catch (const ParseError& e) {
    throw ScenarioError(std::string("trace formula does not parse: ") + e.what());
  }
  return doc;
}

void save_trace(const TraceDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ScenarioError("cannot write trace file: " + path);
  out << trace_to_json(doc).dump(2) << "\n";
}

TraceDocument load_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot read trace file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("trace is not valid JSON: ") + e.what());
  }
  return trace_from_json(j);
}

ordered_json report_to_json(const CheckReport& r) {
  ordered_json j;
  j["check_name"] = r.check_name;
  j["scenario_id"] = r.scenario_id;
  ordered_json verdicts = ordered_json::array();
  for (const auto& e : r.entries) {
    const char* v = e.verdict == CheckEntry::V::Pass     ? "pass"
                    : e.verdict == CheckEntry::V::Fail   ? "fail"
                                                         : "unknown";
    ordered_json o{{"instance", e.instance}, {"verdict", v}};
    if (!e.witness.empty()) o["witness"] = e.witness;
    if (!e.enforced) o["enforced"] = false;
    verdicts.push_back(std::move(o));
  }
  j["verdicts"] = std::move(verdicts);
  j["summary"] = ordered_json{
      {"pass", r.passes()}, {"fail", r.fails()}, {"unknown", r.unknowns()}};
  return j;
}

}  // namespace rosserlab
