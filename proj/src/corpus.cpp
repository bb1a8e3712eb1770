#include "rosserlab/corpus.hpp"

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "rosserlab/errors.hpp"
#include "rosserlab/syntax.hpp"

namespace rosserlab {

namespace {

using K = ConstructionKind;
using F = Fixture::Family;

const std::vector<K> kAll{K::G1, K::G2, K::G3};
const std::vector<K> kG3Only{K::G3};

Formula fml(const char* s) { return parse_formula(s); }

std::vector<Fixture> build_corpus() {
  std::vector<Fixture> out;

  Formula a = fml("(0=0)");                   // code 50
  Formula not_a = fml("~(0=0)");              // 559
  Formula le = fml("(0<=0)");                 // 51
  Formula not_le = fml("~(0<=0)");            // 570
  Formula b = fml("(S(0)=0)");                // 1018, false
  Formula not_b = fml("~(S(0)=0)");           // 11207, true
  Formula u_eq = fml("all x0 (x0=x0)");       // 107030
  Formula u_box = fml("all x0 R(x0)");        // 5456
  Formula r0 = fml("R(0)");                   // 19
  Formula not_r0 = fml("~R(0)");              // 218
  Formula not_rnum50 = Formula::neg(Formula::rosser_box(Term::numeral(50)));  // 66768
  // A theory that proves anything first proves this; scripting it ahead of
  // every planned refutation is what keeps ~(0=0) Rosser-blocked after a
  // bell, exactly as the standard prefix does for the real stream.
  Formula dneg_a = fml("~~(0=0)");            // 6158

  {
    Fixture f{"sound-empty", F::Sound, Scenario{}, kAll};
    f.scenario.horizon = 600;
    f.declared_sound = true;
    f.satlink_mmax = 580;
    out.push_back(std::move(f));
  }
  {
    Fixture f{"sound-truths", F::Sound, Scenario{}, kAll};
    f.scenario.events = {{50, a}, {51, le}, {11207, not_b}};
    f.scenario.horizon = 12000;
    f.declared_sound = true;
    f.satlink_mmax = 11500;
    out.push_back(std::move(f));
  }
  {
    Fixture f{"sound-universal", F::Sound, Scenario{}, kAll};
    f.scenario.events = {{50, a}, {5456, u_box}};
    f.scenario.horizon = 6200;
    f.declared_sound = true;
    f.satlink_mmax = 6000;
    out.push_back(std::move(f));
  }
  {
    Fixture f{"contra-basic", F::Contradiction, Scenario{}, kAll};
    f.scenario.events = {{50, a}, {6158, dneg_a}, {6500, not_a}};
    f.scenario.horizon = 7000;
    f.expect_bell = true;
    f.satlink_mmax = 6900;
    out.push_back(std::move(f));
  }
  {
    Fixture f{"contra-inject", F::Contradiction, Scenario{}, kAll};
    f.scenario.events = {{50, a}, {51, le}, {6158, dneg_a}};
    f.scenario.inject = {{6200, a}};
    f.scenario.horizon = 6800;
    f.expect_bell = true;
    f.satlink_mmax = 6700;
    out.push_back(std::move(f));
  }
  {
    Fixture f{"contra-universal", F::Contradiction, Scenario{}, kAll};
    f.scenario.events = {{50, a}, {6158, dneg_a}, {107030, u_eq}, {107100, not_a}};
    f.scenario.horizon = 108000;
    f.expect_bell = true;
    f.satlink_mmax = 107500;
    out.push_back(std::move(f));
  }
  {
    Fixture f{"contra-false-event", F::Contradiction, Scenario{}, kAll};
    f.scenario.events = {{6158, dneg_a}, {11207, not_b}, {11300, b}};
    f.scenario.horizon = 12000;
    f.expect_bell = true;
    f.satlink_mmax = 11500;
    out.push_back(std::move(f));
  }
  {
    Fixture f{"contra-boxes", F::Contradiction, Scenario{}, kAll};
    f.scenario.events = {{19, r0}, {6158, dneg_a}, {6500, not_r0}};
    f.scenario.horizon = 7000;
    f.expect_bell = true;
    f.satlink_mmax = 6900;
    out.push_back(std::move(f));
  }
  {
    Fixture f{"bell2-basic", F::BellCond2, Scenario{}, kAll};
    f.scenario.events = {{6158, dneg_a}, {66768, not_rnum50}};
    f.scenario.horizon = 67500;
    f.declared_sound = true;  // propositionally satisfiable stream
    f.expect_bell = true;
    f.satlink_mmax = 67200;
    out.push_back(std::move(f));
  }
  {
    Fixture f{"bell2-history", F::BellCond2, Scenario{}, kAll};
    f.scenario.events = {{6158, dneg_a}, {11207, not_b}, {66768, not_rnum50}};
    f.scenario.horizon = 67500;
    f.declared_sound = true;
    f.expect_bell = true;
    f.satlink_mmax = 67200;
    out.push_back(std::move(f));
  }
  {
    Fixture f{"bell3-basic", F::BellCond3, Scenario{}, kAll};
    f.scenario.events = {{6158, dneg_a}, {6300, not_le}};
    f.scenario.horizon = 6800;
    f.expect_bell = true;
    out.push_back(std::move(f));
  }
  {
    Fixture f{"bell3-history", F::BellCond3, Scenario{}, kAll};
    f.scenario.events = {{6158, dneg_a}, {11207, not_b}, {11250, not_le}};
    f.scenario.horizon = 12000;
    f.expect_bell = true;
    out.push_back(std::move(f));
  }
  {
    // Entailment premises feeding the closure's implication rule; the
    // implications' codes exceed every feasible position, which is fine:
    // the rule reads them from P, not from F_m.
    Fixture f{"b2-entailments", F::Entailment, Scenario{}, kG3Only};
    f.scenario.events = {{100, fml("(~R(0) -> ~R(S(0)))")},
                         {150, fml("(~R(S(S(0))) -> ~R(S(S(S(0)))))")},
                         {218, not_r0},
                         {6158, dneg_a},
                         {6500, fml("~(0<=0)")}};
    f.scenario.horizon = 7000;
    f.expect_bell = true;
    out.push_back(std::move(f));
  }
  {
    Fixture f{"enum-sound", F::Enumerator, Scenario{}, kG3Only};
    f.scenario.enumerator_axioms = {fml("~R(0)"), fml("(~R(0) -> ~R(S(0)))")};
    f.scenario.horizon = 2200;
    f.declared_sound = true;
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

const std::vector<Fixture>& curated_corpus() {
  static const std::vector<Fixture> corpus = build_corpus();
  return corpus;
}

const Fixture& fixture_by_id(const std::string& id) {
  for (const auto& f : curated_corpus())
    if (f.id == id) return f;
  throw OperationError("unknown fixture id: " + id);
}

void write_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  nlohmann::ordered_json manifest = nlohmann::ordered_json::array();
  for (const auto& f : curated_corpus()) {
    std::string file = f.id + ".json";
    save_scenario(f.scenario, (fs::path(dir) / file).string());
    nlohmann::ordered_json m;
    m["id"] = f.id;
    m["file"] = file;
    switch (f.family) {
      case Fixture::Family::Sound: m["family"] = "sound"; break;
      case Fixture::Family::Contradiction: m["family"] = "contradiction"; break;
      case Fixture::Family::BellCond2: m["family"] = "bell-condition-2"; break;
      case Fixture::Family::BellCond3: m["family"] = "bell-condition-3"; break;
      case Fixture::Family::Entailment: m["family"] = "entailment"; break;
      case Fixture::Family::Enumerator: m["family"] = "enumerator"; break;
    }
    nlohmann::ordered_json runs = nlohmann::ordered_json::array();
    for (auto k : f.runs) runs.push_back(to_string(k));
    m["constructions"] = std::move(runs);
    m["claim_bound"] = f.claim_bound.str();
    m["declared_sound"] = f.declared_sound;
    m["expect_bell"] = f.expect_bell;
    m["satlink_mmax"] = f.satlink_mmax;
    manifest.push_back(std::move(m));
  }
  std::ofstream out(fs::path(dir) / "manifest.json", std::ios::binary);
  if (!out) throw ScenarioError("cannot write corpus manifest");
  out << manifest.dump(2) << "\n";
}

}  // namespace rosserlab
