#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "rosserlab/corpus.hpp"
#include "rosserlab/errors.hpp"
#include "rosserlab/harness.hpp"
#include "rosserlab/numbering.hpp"
#include "rosserlab/syntax.hpp"
#include "rosserlab/trace_io.hpp"

namespace rl = rosserlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitScenario = 2;
constexpr int kExitDomainCap = 3;

rl::ConstructionTrace run_construction(rl::ConstructionKind kind, const rl::ProofSource& s,
                                       std::uint64_t horizon, rl::LeastModelOrder order) {
  switch (kind) {
    case rl::ConstructionKind::G1:
      return rl::run_g1(s, horizon, order);
    case rl::ConstructionKind::G2:
      return rl::run_g2(s, horizon, order);
    case rl::ConstructionKind::G3:
      return rl::run_g3(s, horizon, order);
  }
  throw rl::OperationError("unreachable construction kind");
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

std::vector<rl::CheckReport> run_suites(const std::string& suite, const rl::TraceDocument& doc,
                                        const rl::Code& bound, bool declared_sound,
                                        std::uint64_t sound_up_to) {
  const rl::ConstructionTrace& t = doc.trace;
  rl::ProofSource source = rl::build_source(doc.scenario);
  std::vector<rl::CheckReport> reports;
  bool matched = false;
  auto want = [&](const char* name) {
    if (suite != "all" && suite != name) return false;
    matched = true;
    return true;
  };

  if (want("claim1")) reports.push_back(rl::verify_claim1(t, bound));
  if (want("mp")) {
    auto pairs = t.kind == rl::ConstructionKind::G1 ? rl::sample_mp_pairs(bound, 100)
                                                    : rl::sample_delta0_mp_pairs(bound, 100);
    reports.push_back(rl::verify_modus_ponens(t, pairs));
  }
  if (want("cb")) {
    for (const auto& u : rl::universals_within(bound))
      reports.push_back(rl::verify_cb(t, u, bound));
  }
  if (want("b2")) {
    auto pairs = rl::declared_entailments(source);
    if (!pairs.empty() || suite == "b2")
      reports.push_back(rl::verify_b2(t, source, pairs));
  }
  if (want("d3")) {
    if (t.kind == rl::ConstructionKind::G3)
      reports.push_back(rl::verify_d3(t, bound));
    else if (suite == "d3")
      throw rl::OperationError("suite d3 needs a g3 trace");
  }
  if (want("delta0"))
    reports.push_back(rl::verify_delta0_completeness(t, rl::delta0_sentences_within(bound)));
  if (want("con")) reports.push_back(rl::verify_consistency_statements(t, bound));
  if (want("prfaxioms")) reports.push_back(rl::verify_proof_predicate(t, source));
  if (want("satlink")) {
    std::uint64_t mmax = sound_up_to > 0 ? sound_up_to : (t.horizon > 0 ? t.horizon - 1 : 0);
    reports.push_back(rl::verify_sat_consistency_link(source, mmax, declared_sound, t.order));
  }
  if (!matched) throw rl::OperationError("unknown suite: " + suite);
  for (auto& r : reports) r.scenario_id = doc.scenario_id;
  return reports;
}

int cmd_run(const std::string& scenario_path, const std::string& kind_name,
            std::uint64_t horizon_override, const std::string& out_path,
            const std::string& order_name) {
  auto kind = rl::construction_from_string(kind_name);
  if (!kind) {
    std::cerr << "unknown construction: " << kind_name << "\n";
    return kExitScenario;
  }
  rl::LeastModelOrder order = order_name == "reversed" ? rl::LeastModelOrder::Reversed
                                                       : rl::LeastModelOrder::Standard;
  rl::TraceDocument doc;
  doc.scenario = rl::load_scenario(scenario_path);
  if (horizon_override > 0) doc.scenario.horizon = horizon_override;
  doc.scenario_id = stem_of(scenario_path);
  rl::ProofSource source = rl::build_source(doc.scenario);
  doc.trace = run_construction(*kind, source, doc.scenario.horizon, order);
  rl::save_trace(doc, out_path);
  std::cout << "trace written to " << out_path << " (mode "
            << (doc.trace.mode == rl::Mode::Procedure2 ? "procedure2" : "procedure1");
  if (doc.trace.switch_point) std::cout << ", switch at " << *doc.trace.switch_point;
  std::cout << ")\n";
  return kExitOk;
}

int cmd_verify(const std::string& trace_path, const std::string& suite, std::uint64_t codes_up_to,
               const std::string& out_path, bool declared_sound, std::uint64_t sound_up_to) {
  rl::TraceDocument doc = rl::load_trace(trace_path);
  auto reports = run_suites(suite, doc, rl::Code(codes_up_to), declared_sound, sound_up_to);
  bool ok = true;
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    out.push_back(rl::report_to_json(r));
    ok = ok && r.ok();
    std::cout << r.check_name << ": " << r.passes() << " pass, " << r.fails() << " fail, "
              << r.unknowns() << " unknown" << (r.ok() ? "" : "  <-- FAIL") << "\n";
    if (!r.ok()) {
      for (const auto& e : r.entries)
        if (e.enforced && e.verdict == rl::CheckEntry::V::Fail) {
          std::cout << "  witness: " << e.instance << ": " << e.witness << "\n";
          break;
        }
    }
  }
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw rl::ScenarioError("cannot write report file: " + out_path);
    f << out.dump(2) << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_enumerate(std::uint64_t count, const std::string& golden_path, bool write_golden) {
  std::string rendered;
  for (std::uint64_t k = 0; k < count; ++k) {
    rl::Formula f = rl::xi(k);
    rendered += std::to_string(k) + "\t" + f.code().str() + "\t" + rl::print_formula(f) + "\n";
  }
  std::cout << rendered;
  if (golden_path.empty()) return kExitOk;
  // Golden lines are (code, surface) pairs.
  std::string pairs;
  for (std::uint64_t k = 0; k < count; ++k) {
    rl::Formula f = rl::xi(k);
    pairs += f.code().str() + "\t" + rl::print_formula(f) + "\n";
  }
  if (write_golden) {
    std::ofstream out(golden_path, std::ios::binary);
    if (!out) throw rl::ScenarioError("cannot write golden file: " + golden_path);
    out << pairs;
    std::cout << "golden file written to " << golden_path << "\n";
    return kExitOk;
  }
  std::ifstream in(golden_path, std::ios::binary);
  if (!in) throw rl::ScenarioError("cannot read golden file: " + golden_path);
  std::string expected((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (expected != pairs) {
    std::cerr << "enumeration differs from the golden file\n";
    return kExitCheckFailed;
  }
  std::cout << "golden file matches\n";
  return kExitOk;
}

int cmd_sat(const std::string& scenario_path, std::uint64_t m) {
  rl::Scenario sc = rl::load_scenario(scenario_path);
  rl::ProofSource source = rl::build_source(sc);
  auto model = rl::least_model(rl::p_set(source, m), rl::Conditions{true, true});
  if (!model) {
    std::cout << "Sat(" << m << "): false\n";
    return kExitOk;
  }
  std::cout << "Sat(" << m << "): true\n";
  std::cout << "least (A)&(B) model on F_" << model->domain_bound().str() << ":\n";
  for (std::size_t i = 0; i < model->domain().size(); ++i)
    std::cout << "  " << model->domain()[i].code().str() << " " << int(model->value_at(i)) << "  "
              << rl::print_formula(model->domain()[i]) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rosserlab: finite stage-function laboratory for Rosser-style provability"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run a construction over a scenario");
  std::string run_scenario, run_kind = "g1", run_out = "trace.json", run_order = "standard";
  std::uint64_t run_horizon = 0;
  run->add_option("--scenario", run_scenario, "scenario JSON file")->required();
  run->add_option("--construction", run_kind, "g1 | g2 | g3");
  run->add_option("--horizon", run_horizon, "override the scenario horizon");
  run->add_option("--out", run_out, "output trace file");
  run->add_option("--order", run_order, "least-model order: standard | reversed");

  auto* verify = app.add_subcommand("verify", "run a verification suite over a trace");
  std::string v_trace, v_suite = "all", v_out;
  std::uint64_t v_bound = 2000, v_sound_up_to = 0;
  bool v_sound = false;
  verify->add_option("--trace", v_trace, "trace JSON file")->required();
  verify->add_option("--suite", v_suite,
                     "claim1 | mp | cb | b2 | d3 | delta0 | con | prfaxioms | satlink | all");
  verify->add_option("--codes-up-to", v_bound, "code bound for checked instances");
  verify->add_option("--out", v_out, "write the JSON report here");
  verify->add_flag("--declared-sound", v_sound, "assert Sat along the whole prefix");
  verify->add_option("--sound-up-to", v_sound_up_to, "Sat-link probe bound (default horizon-1)");

  auto* enumerate = app.add_subcommand("enumerate", "list the formula enumeration");
  std::uint64_t e_count = 10;
  std::string e_golden;
  bool e_write = false;
  enumerate->add_option("--count", e_count, "how many formulas")->check(CLI::PositiveNumber);
  enumerate->add_option("--golden", e_golden, "compare against this golden file");
  enumerate->add_flag("--write-golden", e_write, "regenerate the golden file instead");

  auto* satc = app.add_subcommand("sat", "probe Sat(m) for a scenario");
  std::string s_scenario;
  std::uint64_t s_m = 0;
  satc->add_option("--scenario", s_scenario, "scenario JSON file")->required();
  satc->add_option("--m", s_m, "prefix bound");

  auto* seed = app.add_subcommand("seed-corpus", "materialize the curated scenario corpus");
  std::string seed_dir = "corpus";
  seed->add_option("--out-dir", seed_dir, "target directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_scenario, run_kind, run_horizon, run_out, run_order);
    if (verify->parsed())
      return cmd_verify(v_trace, v_suite, v_bound, v_out, v_sound, v_sound_up_to);
    if (enumerate->parsed()) return cmd_enumerate(e_count, e_golden, e_write);
    if (satc->parsed()) return cmd_sat(s_scenario, s_m);
    if (seed->parsed()) {
      rl::write_corpus(seed_dir);
      std::cout << "corpus written to " << seed_dir << "\n";
      return kExitOk;
    }
  } catch (const rl::DomainCapError& e) {
    std::cerr << "domain cap exceeded: " << e.what() << "\n";
    return kExitDomainCap;
  } catch (const rl::ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return kExitScenario;
  } catch (const rl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitScenario;
  } catch (const rl::OperationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitScenario;
  }
  return kExitScenario;
}
