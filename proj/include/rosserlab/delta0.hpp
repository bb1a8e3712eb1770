#pragma once

#include "rosserlab/ast.hpp"

namespace rosserlab {

// Delta0 recognition is purely syntactic: eq/leq atoms (never R), closed
// under ~ and &, plus bounded universals of the exact shape
//   all xv ~((xv <= t) & ~psi)
// with xv not occurring in t and psi Delta0.
bool is_delta0(const Formula& f);

// Standard-model truth of a Delta0 sentence. Bounded quantifiers iterate the
// value of their bound; an internal guard rejects absurdly large bounds.
bool eval_delta0(const Formula& sentence);

// Matches the bounded-universal shape; returns (var, bound term, body) parts.
struct BoundedUniversal {
  std::uint64_t var;
  Term bound;
  Formula body;
};
std::optional<BoundedUniversal> match_bounded_universal(const Formula& f);

}  // namespace rosserlab
