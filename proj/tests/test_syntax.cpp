#include <doctest.h>

#include "rosserlab/delta0.hpp"
#include "rosserlab/errors.hpp"
#include "rosserlab/numbering.hpp"
#include "rosserlab/syntax.hpp"

using namespace rosserlab;

TEST_CASE("parsing core syntax") {
  Formula f = parse_formula("(0=0)");
  CHECK(f.kind() == FormulaKind::Equal);
  CHECK(f.term_left().is_numeral());
  CHECK(f.term_left().numeral_value() == 0);

  Formula g = parse_formula("all x0 ~((x0 <= S(0)) & ~(x0 = x0))");
  REQUIRE(g.is_universal());
  CHECK(g.bound_var() == 0);
  Formula body = g.body();
  REQUIRE(body.is_negation());
  CHECK(body.sub().kind() == FormulaKind::Conjunction);

  CHECK(parse_formula("R((x1 * S(0)))").kind() == FormulaKind::RosserBox);
  CHECK_THROWS_AS(parse_formula("(0=0"), ParseError);
  CHECK_THROWS_AS(parse_formula("all y0 (0=0)"), ParseError);
  CHECK_THROWS_AS(parse_formula(""), ParseError);
}

TEST_CASE("sugar expansion is definitional") {
  // (A -> B) becomes ~((A) & ~(B))
  Formula imp = parse_formula("((0=0) -> (0=0))");
  Formula expect = Formula::neg(Formula::conj(parse_formula("(0=0)"),
                                              Formula::neg(parse_formula("(0=0)"))));
  CHECK(imp == expect);

  Formula dis = parse_formula("((0=0) | (0<=0))");
  CHECK(dis == Formula::neg(Formula::conj(Formula::neg(parse_formula("(0=0)")),
                                          Formula::neg(parse_formula("(0<=0)")))));

  Formula ex = parse_formula("ex x1 (x1=0)");
  CHECK(ex == Formula::neg(Formula::forall(1, Formula::neg(parse_formula("(x1=0)")))));

  Formula bounded = parse_formula("(all x0 <= S(0)) (x0=x0)");
  CHECK(bounded == parse_formula("all x0 ~((x0<=S(0)) & ~(x0=x0))"));
  CHECK(is_delta0(bounded));
}

TEST_CASE("printing is canonical and round-trips") {
  CHECK(print_formula(parse_formula("(0=0)")) == "(0=0)");
  CHECK(print_formula(Formula::neg(parse_formula("(0=0)"))) == "~(0=0)");
  CHECK(print_formula(Formula::forall(0, parse_formula("(x0=x0)"))) == "all x0 (x0=x0)");
  CHECK(print_term(Term::numeral(3)) == "S(S(S(0)))");
  CHECK(print_term(Term::sum(Term::variable(2), Term::numeral(1))) == "(x2+S(0))");

  // round trip across everything small
  for (const auto& f : f_set(Code(3000))) {
    CAPTURE(print_formula(f));
    CHECK(parse_formula(print_formula(f)) == f);
  }
}

TEST_CASE("numerals") {
  CHECK(Term::numeral(0).is_numeral());
  CHECK(print_term(numeral(2)) == "S(S(0))");
  CHECK(print_term(numeral(5)) == "S(S(S(S(S(0)))))");
  // the successor factory folds chains over zero
  CHECK(Term::successor(Term::successor(Term::numeral(0))) == numeral(2));
  CHECK(Term::successor(Term::variable(0)).kind() == TermKind::Successor);
}

TEST_CASE("substitution") {
  Formula f = parse_formula("(x0=x0)");
  CHECK(substitute(f, 0, numeral(3)) == parse_formula("(S(S(S(0)))=S(S(S(0))))"));

  Formula bound = parse_formula("all x0 (x0=x0)");
  CHECK(substitute(bound, 0, numeral(1)) == bound);

  Formula two = parse_formula("((x0=0) & (x1=0))");
  CHECK(substitute(two, 1, numeral(2)) == parse_formula("((x0=0) & (S(S(0))=0))"));

  CHECK_THROWS_AS(substitute(f, 0, Term::variable(1)), OperationError);

  // closed substitution never changes the quantifier skeleton
  Formula nested = parse_formula("all x1 ((x0=x1) & all x0 (x0=0))");
  Formula after = substitute(nested, 0, numeral(4));
  CHECK(after.is_universal());
  CHECK(after.bound_var() == 1);
  CHECK(after.body().left() == parse_formula("(S(S(S(S(0))))=x1)"));
  CHECK(after.body().right() == parse_formula("all x0 (x0=0)"));
}

TEST_CASE("minus strips exactly one negation") {
  Formula a = parse_formula("(0=0)");
  CHECK(minus(a) == a);
  CHECK(minus(Formula::neg(a)) == a);
  CHECK(minus(Formula::neg(Formula::neg(a))) == Formula::neg(a));
  // idempotent once the result is not a negation
  for (const auto& f : f_set(Code(2000))) {
    Formula m = minus(f);
    if (!m.is_negation()) CHECK(minus(m) == m);
  }
}

TEST_CASE("term evaluation") {
  CHECK(eval_term(numeral(2)) == 2);
  CHECK(eval_term(Term::sum(numeral(2), numeral(3))) == 5);
  CHECK(eval_term(Term::product(numeral(2), numeral(0))) == 0);
  CHECK(eval_term(Term::variable(3), TermEnv{{3, BigNat(7)}}) == 7);
  CHECK_THROWS_AS(eval_term(Term::variable(3)), OperationError);
}

TEST_CASE("Delta0 classification") {
  CHECK(is_delta0(parse_formula("(0=0)")));
  CHECK(!is_delta0(parse_formula("all x0 (x0=x0)")));
  CHECK(is_delta0(parse_formula("all x0 ~((x0 <= S(0)) & ~(x0=x0))")));
  CHECK(!is_delta0(parse_formula("R(0)")));
  CHECK(!is_delta0(parse_formula("~R(0)")));
  // the bound must not mention the quantified variable
  CHECK(!is_delta0(parse_formula("all x0 ~((x0 <= x0) & ~(x0=x0))")));
  // only the exact guard shape counts as bounded
  CHECK(!is_delta0(parse_formula("all x0 ~((0 <= x0) & ~(x0=x0))")));
}

TEST_CASE("Delta0 evaluation") {
  CHECK(eval_delta0(parse_formula("(0=0)")));
  CHECK(!eval_delta0(parse_formula("(S(0)=0)")));
  // all x0 <= 2: x0 <= 3
  Formula f = parse_formula("(all x0 <= S(S(0))) (x0 <= S(S(S(0))))");
  CHECK(eval_delta0(f));
  Formula g = parse_formula("(all x0 <= S(S(0))) (x0 <= S(0))");
  CHECK(!eval_delta0(g));
  CHECK_THROWS_AS(eval_delta0(parse_formula("(x0=0)")), OperationError);
  CHECK_THROWS_AS(eval_delta0(parse_formula("R(0)")), OperationError);
  CHECK(eval_delta0(parse_formula("((S(0)*S(S(0)))=(S(S(0))*S(0)))")));
}
