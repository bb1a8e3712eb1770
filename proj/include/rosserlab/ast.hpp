#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rosserlab/code.hpp"

namespace rosserlab {

class Formula;

// Terms of the arithmetic language over {0, S, +, *}.
// Numerals are a single payload node, so S^n(0) costs O(1) regardless of n;
// the successor factory folds onto numerals and a Successor node therefore
// never has a numeral child.
enum class TermKind : std::uint8_t { Numeral, Variable, Successor, Sum, Product };

class Term {
 public:
  static Term numeral(const BigNat& n);
  static Term variable(std::uint64_t index);
  static Term successor(const Term& t);
  static Term sum(const Term& a, const Term& b);
  static Term product(const Term& a, const Term& b);

  TermKind kind() const;
  const BigNat& numeral_value() const;  // Numeral only
  std::uint64_t var_index() const;      // Variable only
  Term child() const;                   // Successor only
  Term left() const;                    // Sum/Product
  Term right() const;                   // Sum/Product
  const Code& code() const;

  bool is_numeral() const { return kind() == TermKind::Numeral; }
  bool closed() const;
  void collect_vars(std::set<std::uint64_t>& out) const;
  bool mentions_var(std::uint64_t v) const;

  friend bool operator==(const Term& a, const Term& b) { return a.code() == b.code(); }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
  friend bool operator<(const Term& a, const Term& b) { return a.code() < b.code(); }

 private:
  friend class Formula;
  struct Node;
  explicit Term(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

// Formulas over the core connectives: atoms (=, <=, R), negation,
// conjunction, universal quantification. Everything else is parse-time sugar.
enum class FormulaKind : std::uint8_t { Equal, LessEq, RosserBox, Negation, Conjunction, Universal };

class Formula {
 public:
  static Formula eq(const Term& a, const Term& b);
  static Formula leq(const Term& a, const Term& b);
  static Formula rosser_box(const Term& t);
  static Formula neg(const Formula& f);
  static Formula conj(const Formula& a, const Formula& b);
  static Formula forall(std::uint64_t var, const Formula& body);

  // Sugar-expanded implication ~(a & ~b).
  static Formula implies(const Formula& a, const Formula& b);

  FormulaKind kind() const;
  Term term_left() const;      // Equal/LessEq
  Term term_right() const;     // Equal/LessEq
  Term box_term() const;       // RosserBox
  Formula sub() const;         // Negation
  Formula left() const;        // Conjunction
  Formula right() const;       // Conjunction
  std::uint64_t bound_var() const;  // Universal
  Formula body() const;        // Universal
  const Code& code() const;

  bool is_negation() const { return kind() == FormulaKind::Negation; }
  bool is_universal() const { return kind() == FormulaKind::Universal; }
  bool is_atom() const {
    auto k = kind();
    return k == FormulaKind::Equal || k == FormulaKind::LessEq || k == FormulaKind::RosserBox;
  }

  void collect_free_vars(std::set<std::uint64_t>& out) const;
  std::set<std::uint64_t> free_vars() const;
  bool is_sentence() const { return free_vars().empty(); }

  friend bool operator==(const Formula& a, const Formula& b) { return a.code() == b.code(); }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  friend bool operator<(const Formula& a, const Formula& b) { return a.code() < b.code(); }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

using FormulaSet = std::map<Code, Formula>;

inline void set_insert(FormulaSet& s, const Formula& f) { s.emplace(f.code(), f); }
inline bool set_contains(const FormulaSet& s, const Formula& f) { return s.count(f.code()) > 0; }

}  // namespace rosserlab
