#pragma once

#include <string>
#include <vector>

#include "rosserlab/construction.hpp"
#include "rosserlab/instances.hpp"
#include "rosserlab/rosser.hpp"

namespace rosserlab {

// One checked instance. Fail entries always carry a concrete witness
// (formulas and positions). Entries with enforced=false are observational:
// they are recorded but do not fail the suite.
struct CheckEntry {
  enum class V { Pass, Fail, Unknown };
  std::string instance;
  V verdict = V::Unknown;
  std::string witness;
  bool enforced = true;
};

struct CheckReport {
  std::string check_name;
  std::string scenario_id;
  std::vector<CheckEntry> entries;

  std::size_t count(CheckEntry::V v) const;
  std::size_t passes() const { return count(CheckEntry::V::Pass); }
  std::size_t fails() const { return count(CheckEntry::V::Fail); }
  std::size_t unknowns() const { return count(CheckEntry::V::Unknown); }
  bool ok() const;  // no enforced failure
};

std::string describe(const Formula& f);

// Claim 1 of the respective construction, dispatched on t.kind:
//   g1: e(f,V,n) = 1  <=>  f Rosser-provable;
//   g2: critical f => provable, and critical ~f in F_n => f not provable;
//   g3: ~f in X_{m-1}  <=>  f not Rosser-provable.
// Pre-switch traces yield unknown verdicts throughout.
CheckReport verify_claim1(const ConstructionTrace& t, const Code& code_bound);

// provable(a -> b) and provable(a) imply provable(b).
CheckReport verify_modus_ponens(const ConstructionTrace& t,
                                const std::vector<std::pair<Formula, Formula>>& pairs);

// provable(f) for universal f implies every instance within the code bound
// is provable.
CheckReport verify_cb(const ConstructionTrace& t, const Formula& f, const Code& instance_bound);

// For scenario-declared entailments (phi, psi) — the source proves
// ~psi -> ~phi somewhere — provable(phi) implies provable(psi).
CheckReport verify_b2(const ConstructionTrace& t, const ProofSource& s,
                      const std::vector<std::pair<Formula, Formula>>& entailments);

// provable(f) implies provable(R(numeral(code(f)))), g3 only.
CheckReport verify_d3(const ConstructionTrace& t, const Code& code_bound);

// Every true Delta0 sentence in the list is provable; false ones are
// recorded observationally.
CheckReport verify_delta0_completeness(const ConstructionTrace& t,
                                       const std::vector<Formula>& sentences);

// Consistency statements over the trace: no complementary provable pair
// within the bound (enforced for g1, observational for g2/g3), the local
// statement — ~(0=0) never provable — enforced everywhere, and per-formula
// records as a schema sample.
CheckReport verify_consistency_statements(const ConstructionTrace& t, const Code& code_bound);

// The trace is single-conclusion and echoes the source exactly wherever it
// is still in Procedure 1.
CheckReport verify_proof_predicate(const ConstructionTrace& t, const ProofSource& s);

// A complementary pair inside P_{T,m} forces Sat to fail from m on; a
// declared-sound source keeps Sat true up to m_max.
CheckReport verify_sat_consistency_link(const ProofSource& s, std::uint64_t m_max,
                                        bool declared_sound,
                                        LeastModelOrder order = LeastModelOrder::Standard);

// Helpers the CLI and the acceptance suite share.
std::vector<std::pair<Formula, Formula>> sample_mp_pairs(const Code& code_bound,
                                                         std::size_t count);

// Modus ponens pairs drawn from closed Delta0 sentences only. This is the
// range where g2's criticality machinery settles implications at finite n;
// for arbitrary formulas the property needs n to exceed the codes of the
// negated pair, which no finite stage provides.
std::vector<std::pair<Formula, Formula>> sample_delta0_mp_pairs(const Code& code_bound,
                                                                std::size_t count);
std::vector<Formula> delta0_sentences_within(const Code& code_bound);
std::vector<Formula> universals_within(const Code& code_bound);
std::vector<std::pair<Formula, Formula>> declared_entailments(const ProofSource& s);

}  // namespace rosserlab
