#include "rosserlab/ast.hpp"

namespace rosserlab {

// Coding lanes; B = 11 node kinds, tags 1..11, lane of c = c mod 11
// (residue 0 = tag 11). Unary lanes skip the pairing step so negation
// chains and R(numeral(n)) stay linear in the part's code; numerals carry
// their value as a payload. 0 is not a code, and residues with invalid
// payloads are gaps.
//   1  numeral(n)                  11n+1
//   2  variable(i)                 11i+2
//   3  successor(t), t non-numeral 11c+3
//   4  sum                         11 pair(a,b)+4
//   5  product                     11 pair(a,b)+5
//   6  =                           11 pair(a,b)+6
//   7  <=                          11 pair(a,b)+7
//   8  R(t)                        11c+8
//   9  negation                    11c+9
//   10 conjunction                 11 pair(a,b)+10
//   11 universal(v, body)          11 pair(v,c)+11
namespace {
constexpr unsigned kLanes = 11;

Code lane_unary(const Code& child, unsigned tag) {
  return Code(BigNat(child.value() * kLanes + tag));
}
Code lane_pair(const BigNat& a, const BigNat& b, unsigned tag) {
  return Code(BigNat(cantor_pair(a, b) * kLanes + tag));
}
}  // namespace

struct Term::Node {
  TermKind kind;
  BigNat payload;  // Numeral value or Variable index
  std::shared_ptr<const Node> a, b;
  Code code;
  bool closed = true;
};

Term Term::numeral(const BigNat& n) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Numeral;
  node->payload = n;
  node->code = Code(BigNat(n * kLanes + 1));
  return Term(std::move(node));
}

Term Term::variable(std::uint64_t index) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Variable;
  node->payload = index;
  node->code = Code(BigNat(BigNat(index) * kLanes + 2));
  node->closed = false;
  return Term(std::move(node));
}

Term Term::successor(const Term& t) {
  if (t.is_numeral()) return numeral(t.numeral_value() + 1);
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Successor;
  node->a = t.p_;
  node->code = lane_unary(t.code(), 3);
  node->closed = t.closed();
  return Term(std::move(node));
}

Term Term::sum(const Term& a, const Term& b) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Sum;
  node->a = a.p_;
  node->b = b.p_;
  node->code = lane_pair(a.code().value(), b.code().value(), 4);
  node->closed = a.closed() && b.closed();
  return Term(std::move(node));
}

Term Term::product(const Term& a, const Term& b) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Product;
  node->a = a.p_;
  node->b = b.p_;
  node->code = lane_pair(a.code().value(), b.code().value(), 5);
  node->closed = a.closed() && b.closed();
  return Term(std::move(node));
}

TermKind Term::kind() const { return p_->kind; }
const BigNat& Term::numeral_value() const { return p_->payload; }
std::uint64_t Term::var_index() const { return static_cast<std::uint64_t>(p_->payload); }
const Code& Term::code() const { return p_->code; }
bool Term::closed() const { return p_->closed; }
Term Term::child() const { return Term(p_->a); }
Term Term::left() const { return Term(p_->a); }
Term Term::right() const { return Term(p_->b); }

void Term::collect_vars(std::set<std::uint64_t>& out) const {
  switch (kind()) {
    case TermKind::Numeral:
      return;
    case TermKind::Variable:
      out.insert(var_index());
      return;
    case TermKind::Successor:
      child().collect_vars(out);
      return;
    case TermKind::Sum:
    case TermKind::Product:
      left().collect_vars(out);
      right().collect_vars(out);
      return;
  }
}

bool Term::mentions_var(std::uint64_t v) const {
  switch (kind()) {
    case TermKind::Numeral:
      return false;
    case TermKind::Variable:
      return var_index() == v;
    case TermKind::Successor:
      return child().mentions_var(v);
    case TermKind::Sum:
    case TermKind::Product:
      return left().mentions_var(v) || right().mentions_var(v);
  }
  return false;
}

struct Formula::Node {
  FormulaKind kind;
  std::uint64_t var = 0;
  std::shared_ptr<const Term::Node> t1, t2;
  std::shared_ptr<const Node> f1, f2;
  Code code;
};

Formula Formula::eq(const Term& a, const Term& b) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Equal;
  node->t1 = a.p_;
  node->t2 = b.p_;
  node->code = lane_pair(a.code().value(), b.code().value(), 6);
  return Formula(std::move(node));
}

Formula Formula::leq(const Term& a, const Term& b) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::LessEq;
  node->t1 = a.p_;
  node->t2 = b.p_;
  node->code = lane_pair(a.code().value(), b.code().value(), 7);
  return Formula(std::move(node));
}

Formula Formula::rosser_box(const Term& t) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::RosserBox;
  node->t1 = t.p_;
  node->code = lane_unary(t.code(), 8);
  return Formula(std::move(node));
}

Formula Formula::neg(const Formula& f) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Negation;
  node->f1 = f.p_;
  node->code = lane_unary(f.code(), 9);
  return Formula(std::move(node));
}

Formula Formula::conj(const Formula& a, const Formula& b) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Conjunction;
  node->f1 = a.p_;
  node->f2 = b.p_;
  node->code = lane_pair(a.code().value(), b.code().value(), 10);
  return Formula(std::move(node));
}

Formula Formula::forall(std::uint64_t var, const Formula& body) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Universal;
  node->var = var;
  node->f1 = body.p_;
  node->code = lane_pair(BigNat(var), body.code().value(), 11);
  return Formula(std::move(node));
}

Formula Formula::implies(const Formula& a, const Formula& b) { return neg(conj(a, neg(b))); }

FormulaKind Formula::kind() const { return p_->kind; }
const Code& Formula::code() const { return p_->code; }
std::uint64_t Formula::bound_var() const { return p_->var; }
Term Formula::term_left() const { return Term(p_->t1); }
Term Formula::term_right() const { return Term(p_->t2); }
Term Formula::box_term() const { return Term(p_->t1); }
Formula Formula::sub() const { return Formula(p_->f1); }
Formula Formula::left() const { return Formula(p_->f1); }
Formula Formula::right() const { return Formula(p_->f2); }
Formula Formula::body() const { return Formula(p_->f1); }

void Formula::collect_free_vars(std::set<std::uint64_t>& out) const {
  switch (kind()) {
    case FormulaKind::Equal:
    case FormulaKind::LessEq:
      term_left().collect_vars(out);
      term_right().collect_vars(out);
      return;
    case FormulaKind::RosserBox:
      box_term().collect_vars(out);
      return;
    case FormulaKind::Negation:
      sub().collect_free_vars(out);
      return;
    case FormulaKind::Conjunction:
      left().collect_free_vars(out);
      right().collect_free_vars(out);
      return;
    case FormulaKind::Universal: {
      std::set<std::uint64_t> inner;
      body().collect_free_vars(inner);
      inner.erase(bound_var());
      out.insert(inner.begin(), inner.end());
      return;
    }
  }
}

std::set<std::uint64_t> Formula::free_vars() const {
  std::set<std::uint64_t> out;
  collect_free_vars(out);
  return out;
}

}  // namespace rosserlab
