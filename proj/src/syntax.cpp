#include "rosserlab/syntax.hpp"

#include <cctype>

#include "rosserlab/errors.hpp"

namespace rosserlab {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Formula formula() {
    Formula f = fml();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return f;
  }

  Term term_only() {
    Term t = term();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return t;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool eat_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  std::uint64_t nat() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected number");
    std::uint64_t n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      n = n * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      ++pos_;
    }
    return n;
  }

  std::uint64_t var_index() {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != 'x') fail("expected variable");
    ++pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected variable index");
    std::uint64_t n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      n = n * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      ++pos_;
    }
    return n;
  }

  Term term() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected term");
    char c = s_[pos_];
    if (c == '0') {
      ++pos_;
      return Term::numeral(0);
    }
    if (c == 'x') return Term::variable(var_index());
    if (c == 'S') {
      ++pos_;
      expect('(');
      Term t = term();
      expect(')');
      return Term::successor(t);
    }
    if (c == '(') {
      ++pos_;
      Term a = term();
      skip_ws();
      if (eat('+')) {
        Term b = term();
        expect(')');
        return Term::sum(a, b);
      }
      if (eat('*')) {
        Term b = term();
        expect(')');
        return Term::product(a, b);
      }
      fail("expected '+' or '*'");
    }
    fail("expected term");
  }

  // "(" already consumed: try "t = u" / "t <= u"; restore and return nothing
  // if the parenthesis opens a compound formula instead.
  std::optional<Formula> paren_atom() {
    std::size_t save = pos_;
    try {
      Term a = term();
      skip_ws();
      if (eat('=')) {
        Term b = term();
        expect(')');
        return Formula::eq(a, b);
      }
      if (pos_ + 1 < s_.size() && s_[pos_] == '<' && s_[pos_ + 1] == '=') {
        pos_ += 2;
        Term b = term();
        expect(')');
        return Formula::leq(a, b);
      }
      pos_ = save;
      return std::nullopt;
    } catch (const ParseError&) {
      pos_ = save;
      return std::nullopt;
    }
  }

  Formula fml() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected formula");
    char c = s_[pos_];
    if (c == '~') {
      ++pos_;
      return Formula::neg(fml());
    }
    if (c == 'R') {
      ++pos_;
      expect('(');
      Term t = term();
      expect(')');
      return Formula::rosser_box(t);
    }
    if (eat_word("all")) {
      std::uint64_t v = var_index();
      Formula body = fml();
      return Formula::forall(v, body);
    }
    if (eat_word("ex")) {
      std::uint64_t v = var_index();
      Formula body = fml();
      return Formula::neg(Formula::forall(v, Formula::neg(body)));
    }
    if (c == '(') {
      ++pos_;
      skip_ws();
      if (eat_word("all")) {
        // bounded universal sugar: (all xN <= t) A
        std::uint64_t v = var_index();
        skip_ws();
        if (!(pos_ + 1 < s_.size() && s_[pos_] == '<' && s_[pos_ + 1] == '=')) fail("expected '<='");
        pos_ += 2;
        Term bound = term();
        expect(')');
        Formula body = fml();
        Formula guard = Formula::leq(Term::variable(v), bound);
        return Formula::forall(v, Formula::neg(Formula::conj(guard, Formula::neg(body))));
      }
      if (auto atom = paren_atom()) return *atom;
      Formula a = fml();
      skip_ws();
      if (eat('&')) {
        Formula b = fml();
        expect(')');
        return Formula::conj(a, b);
      }
      if (pos_ + 1 < s_.size() && s_[pos_] == '-' && s_[pos_ + 1] == '>') {
        pos_ += 2;
        Formula b = fml();
        expect(')');
        return Formula::implies(a, b);
      }
      if (eat('|')) {
        Formula b = fml();
        expect(')');
        return Formula::neg(Formula::conj(Formula::neg(a), Formula::neg(b)));
      }
      fail("expected '&', '->' or '|'");
    }
    fail("expected formula");
  }
};

void print_term_into(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Numeral: {
      // S-chain over 0; numerals in printed formulas stay modest.
      BigNat n = t.numeral_value();
      if (n > BigNat(1000000)) throw OperationError("refusing to print a numeral above 10^6");
      auto k = static_cast<std::uint64_t>(n);
      for (std::uint64_t i = 0; i < k; ++i) out += "S(";
      out += '0';
      for (std::uint64_t i = 0; i < k; ++i) out += ')';
      return;
    }
    case TermKind::Variable:
      out += 'x';
      out += std::to_string(t.var_index());
      return;
    case TermKind::Successor:
      out += "S(";
      print_term_into(t.child(), out);
      out += ')';
      return;
    case TermKind::Sum:
    case TermKind::Product:
      out += '(';
      print_term_into(t.left(), out);
      out += t.kind() == TermKind::Sum ? '+' : '*';
      print_term_into(t.right(), out);
      out += ')';
      return;
  }
}

void print_formula_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Equal:
    case FormulaKind::LessEq:
      out += '(';
      print_term_into(f.term_left(), out);
      out += f.kind() == FormulaKind::Equal ? "=" : "<=";
      print_term_into(f.term_right(), out);
      out += ')';
      return;
    case FormulaKind::RosserBox:
      out += "R(";
      print_term_into(f.box_term(), out);
      out += ')';
      return;
    case FormulaKind::Negation:
      out += '~';
      print_formula_into(f.sub(), out);
      return;
    case FormulaKind::Conjunction:
      out += '(';
      print_formula_into(f.left(), out);
      out += '&';
      print_formula_into(f.right(), out);
      out += ')';
      return;
    case FormulaKind::Universal:
      out += "all x";
      out += std::to_string(f.bound_var());
      out += ' ';
      print_formula_into(f.body(), out);
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).formula(); }
Term parse_term(std::string_view text) { return Parser(text).term_only(); }

std::string print_formula(const Formula& f) {
  std::string out;
  print_formula_into(f, out);
  return out;
}

std::string print_term(const Term& t) {
  std::string out;
  print_term_into(t, out);
  return out;
}

Term substitute(const Term& in, std::uint64_t v, const Term& t) {
  switch (in.kind()) {
    case TermKind::Numeral:
      return in;
    case TermKind::Variable:
      return in.var_index() == v ? t : in;
    case TermKind::Successor:
      return Term::successor(substitute(in.child(), v, t));
    case TermKind::Sum:
      return Term::sum(substitute(in.left(), v, t), substitute(in.right(), v, t));
    case TermKind::Product:
      return Term::product(substitute(in.left(), v, t), substitute(in.right(), v, t));
  }
  return in;
}

Formula substitute(const Formula& f, std::uint64_t v, const Term& t) {
  if (!t.closed()) throw OperationError("substitute expects a closed term");
  switch (f.kind()) {
    case FormulaKind::Equal:
      return Formula::eq(substitute(f.term_left(), v, t), substitute(f.term_right(), v, t));
    case FormulaKind::LessEq:
      return Formula::leq(substitute(f.term_left(), v, t), substitute(f.term_right(), v, t));
    case FormulaKind::RosserBox:
      return Formula::rosser_box(substitute(f.box_term(), v, t));
    case FormulaKind::Negation:
      return Formula::neg(substitute(f.sub(), v, t));
    case FormulaKind::Conjunction:
      return Formula::conj(substitute(f.left(), v, t), substitute(f.right(), v, t));
    case FormulaKind::Universal:
      if (f.bound_var() == v) return f;  // v is bound here
      return Formula::forall(f.bound_var(), substitute(f.body(), v, t));
  }
  return f;
}

Formula minus(const Formula& f) { return f.is_negation() ? f.sub() : f; }

BigNat eval_term(const Term& t, const TermEnv& env) {
  switch (t.kind()) {
    case TermKind::Numeral:
      return t.numeral_value();
    case TermKind::Variable: {
      auto it = env.find(t.var_index());
      if (it == env.end())
        throw OperationError("unbound variable x" + std::to_string(t.var_index()));
      return it->second;
    }
    case TermKind::Successor:
      return eval_term(t.child(), env) + 1;
    case TermKind::Sum:
      return eval_term(t.left(), env) + eval_term(t.right(), env);
    case TermKind::Product:
      return eval_term(t.left(), env) * eval_term(t.right(), env);
  }
  throw OperationError("unreachable term kind");
}

}  // namespace rosserlab
