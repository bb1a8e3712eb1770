#pragma once

#include <optional>
#include <vector>

#include "rosserlab/ast.hpp"

namespace rosserlab {

// A truth assignment on F_m: a total map from every formula of code <= m to
// a bit, respecting V(~f) = 1 - V(f) and V(f & g) = V(f) * V(g).
class TruthAssignment {
 public:
  TruthAssignment(Code domain_bound, std::vector<Formula> domain, std::vector<std::uint8_t> bits);

  const Code& domain_bound() const { return bound_; }
  const std::vector<Formula>& domain() const { return domain_; }
  // Value on a formula of the domain; nullopt outside it.
  std::optional<int> value(const Formula& f) const;
  std::optional<int> value(const Code& c) const;
  int value_at(std::size_t i) const { return bits_[i]; }

  // The full bit string read over the domain in ascending code order.
  const std::vector<std::uint8_t>& bits() const { return bits_; }

 private:
  Code bound_;
  std::vector<Formula> domain_;  // ascending
  std::vector<std::uint8_t> bits_;
};

// Totality on F_m plus propositional coherence.
bool is_assignment(const std::map<Code, int>& candidate, const Code& m);

// Condition (A): if V(f) = 1 and f' in F_m is an instance of f, V(f') = 1.
bool satisfies_condition_a(const TruthAssignment& v);

// Condition (B): Delta0 sentences of F_m carry their standard truth value.
bool satisfies_condition_b(const TruthAssignment& v);

// Model of X: d(X) <= m and V assigns 1 to every member.
bool is_model_of(const TruthAssignment& v, const std::vector<Formula>& xs);

struct Conditions {
  bool a = false;
  bool b = false;
};

// Which assignment counts as least: the bit string over F_n in ascending
// code order is read as a binary natural (first formula = most significant
// bit). Reversed flips the preference, yielding the greatest assignment;
// claim checks must not depend on the choice.
enum class LeastModelOrder { Standard, Reversed };

// The least model of X on F_{d(X)} satisfying the requested conditions, or
// nullopt when X has no such model. Throws DomainCapError when F_{d(X)}
// cannot be materialized.
std::optional<TruthAssignment> least_model(const std::vector<Formula>& xs, Conditions conds,
                                           LeastModelOrder order = LeastModelOrder::Standard);

// e(f, V, n): the total extension of V to every formula. Atomic or
// universal f: V(f) if f in F_n, else its truth value when it is a Delta0
// sentence, else 1. Negation and conjunction recurse through the bit
// algebra. Returns 0 outright if V is not an assignment on F_n.
int e_eval(const Formula& f, const TruthAssignment& v, const Code& n);

}  // namespace rosserlab
