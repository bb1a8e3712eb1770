#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rosserlab/ast.hpp"
#include "rosserlab/models.hpp"

namespace rosserlab {

// A single-conclusion proof stream: a deterministic total function from
// positions to at most one formula each. Proof positions are bare stream
// indices, not coded derivations.
class ProofSource {
 public:
  ProofSource() : ProofSource({}, "empty") {}
  ProofSource(std::map<std::uint64_t, Formula> entries, std::string descriptor);

  std::optional<Formula> at(std::uint64_t y) const;
  const std::map<std::uint64_t, Formula>& entries() const { return *entries_; }
  const std::string& descriptor() const { return descriptor_; }

  // Defined positions within [0, m], ascending.
  std::vector<std::uint64_t> positions_up_to(std::uint64_t m) const;

 private:
  std::shared_ptr<const std::map<std::uint64_t, Formula>> entries_;
  std::string descriptor_;
};

inline std::optional<Formula> proof_at(const ProofSource& s, std::uint64_t y) { return s.at(y); }

// P_{T,m}: the set of formulas appearing at positions <= m.
std::vector<Formula> p_set(const ProofSource& s, std::uint64_t m);

// The finite prefix view of a source.
struct ProofPrefix {
  ProofSource source;
  std::uint64_t bound = 0;
  std::vector<std::pair<std::uint64_t, Formula>> members;  // defined positions <= bound
};
ProofPrefix prefix_of(const ProofSource& s, std::uint64_t m);

// A source answering exactly per the script. Positions must be distinct.
ProofSource scripted_source(const std::vector<std::pair<std::uint64_t, Formula>>& events);

// Adds f at position `at` and ~f at `at`+1; both positions must be free.
ProofSource inject_contradiction(const ProofSource& s, std::uint64_t at, const Formula& f);

// Options for the tiny closure enumerator standing in for a real theory:
// the stream lists the axioms, a finite stock of propositional tautology
// instances built from the given templates over the axioms' subformulas,
// and everything reachable from those by modus ponens.
struct EnumeratorOptions {
  // Templates are written with metavariable atoms R(x98), R(x99) standing
  // for A and B; instances substitute pool formulas for them.
  std::vector<std::string> templates = {
      "(A -> A)",
      "(A -> (B -> A))",
      "((A & B) -> A)",
      "((A & B) -> B)",
      "(A -> (B -> (A & B)))",
      "(~~A -> A)",
  };
  std::size_t pool_limit = 6;       // how many subformulas feed the templates
  std::uint64_t first_position = 0; // where the stream starts
};

ProofSource axiom_enumerator_source(const std::vector<Formula>& axioms,
                                    const EnumeratorOptions& opts = {});

// Sat(m): P_{T,m} has a model satisfying conditions (A) and (B).
bool sat(const ProofSource& s, std::uint64_t m,
         LeastModelOrder order = LeastModelOrder::Standard);
bool sat(const ProofPrefix& p, std::uint64_t m,
         LeastModelOrder order = LeastModelOrder::Standard);

}  // namespace rosserlab
