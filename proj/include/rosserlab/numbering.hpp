#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "rosserlab/ast.hpp"

namespace rosserlab {

inline const Code& encode(const Term& t) { return t.code(); }
inline const Code& encode(const Formula& f) { return f.code(); }

// Inverse of encoding; values that code nothing yield nullopt.
std::optional<std::variant<Term, Formula>> decode(const Code& c);
std::optional<Formula> decode_formula(const Code& c);
std::optional<Term> decode_term(const Code& c);

// Cap on materializing F_n; configurable via ROSSERLAB_FN_CAP or setter.
std::size_t fn_cap();
void set_fn_cap(std::size_t cap);

// F_m: every formula with code <= m, ascending. Throws DomainCapError when
// the set would exceed the cap.
std::vector<Formula> f_set(const Code& m);

// The ascending repetition-free enumeration of all formulas; xi(k) is the
// (k+1)-st formula in code order.
Formula xi(std::uint64_t k);
std::uint64_t index_of(const Formula& f);

// d(X): least m with X contained in F_m, i.e. 0 for empty X else the
// maximum code.
Code domain_bound(const std::vector<Formula>& xs);
Code domain_bound(const FormulaSet& xs);

// Code-level connective arithmetic.
Code dot_neg(const Code& c);
Code dot_imp(const Code& a, const Code& b);
Code rosser_box_code(const Code& c);

}  // namespace rosserlab
