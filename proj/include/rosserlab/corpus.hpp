#pragma once

#include <string>
#include <vector>

#include "rosserlab/construction.hpp"
#include "rosserlab/scenario.hpp"

namespace rosserlab {

// A curated fixture: a scenario plus the expectations the acceptance suite
// asserts about it. Scripted negation events keep code <= position so the
// closure set sees them; implication premises are exempt (their codes are
// products of their parts and no feasible stream position reaches them).
struct Fixture {
  enum class Family { Sound, Contradiction, BellCond2, BellCond3, Entailment, Enumerator };

  std::string id;
  Family family;
  Scenario scenario;
  std::vector<ConstructionKind> runs;  // constructions the fixture supports
  Code claim_bound = Code(2000);       // >= 50 formulas at this bound
  bool declared_sound = false;
  bool expect_bell = false;            // g3 expectation within the horizon
  std::uint64_t satlink_mmax = 0;      // 0 = skip the Sat-link suite
};

const std::vector<Fixture>& curated_corpus();
const Fixture& fixture_by_id(const std::string& id);

// Writes every fixture scenario (and a manifest of the metadata) to dir.
void write_corpus(const std::string& dir);

}  // namespace rosserlab
