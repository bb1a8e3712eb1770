#pragma once

#include <map>
#include <string>
#include <string_view>

#include "rosserlab/ast.hpp"

namespace rosserlab {

// Surface grammar:
//   term := "0" | "x"NAT | "S(" term ")" | "(" term "+" term ")" | "(" term "*" term ")"
//   atom := "(" term "=" term ")" | "(" term "<=" term ")" | "R(" term ")"
//   fml  := atom | "~" fml | "(" fml "&" fml ")" | "all x"NAT" " fml
// Sugar, expanded at parse time:
//   (A -> B)            => ~((A) & ~(B))
//   (A | B)             => ~(~(A) & ~(B))
//   ex xN A             => ~ all xN ~(A)
//   (all xN <= t) A     => all xN ~((xN <= t) & ~(A))
// Whitespace may appear between any two tokens.
Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);

// Canonical printing: core connectives only, minimal spacing, numerals as
// S-chains. parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);
std::string print_term(const Term& t);

inline Term numeral(const BigNat& n) { return Term::numeral(n); }

// Replaces every free occurrence of variable v in f by the closed term t.
Term substitute(const Term& in, std::uint64_t v, const Term& t);
Formula substitute(const Formula& f, std::uint64_t v, const Term& t);

// Strips exactly one leading negation, if any.
Formula minus(const Formula& f);

// Standard interpretation of a term under an environment for its variables.
using TermEnv = std::map<std::uint64_t, BigNat>;
BigNat eval_term(const Term& t, const TermEnv& env = {});

}  // namespace rosserlab
