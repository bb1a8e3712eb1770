#include <doctest.h>

#include <nlohmann/json.hpp>

#include "rosserlab/errors.hpp"
#include "rosserlab/proof_stream.hpp"
#include "rosserlab/scenario.hpp"
#include "rosserlab/syntax.hpp"

using namespace rosserlab;

TEST_CASE("scripted sources answer per script") {
  Formula a = parse_formula("(0=0)");
  ProofSource s = scripted_source({{3, a}});
  CHECK(s.at(3) == a);
  CHECK(!s.at(4).has_value());
  CHECK(s.at(3) == s.at(3));  // deterministic

  CHECK_THROWS_AS(scripted_source({{0, a}, {0, parse_formula("(0<=0)")}}), ScenarioError);
}

TEST_CASE("p_set grows monotonically") {
  Formula a = parse_formula("(0=0)");
  ProofSource s = scripted_source({{3, a}});
  CHECK(p_set(ProofSource{}, 50).empty());
  CHECK(p_set(s, 2).empty());
  CHECK(p_set(s, 3).size() == 1);
  for (std::uint64_t m = 0; m < 10; ++m) {
    auto small = p_set(s, m);
    auto big = p_set(s, m + 1);
    for (const auto& f : small) CHECK(std::count(big.begin(), big.end(), f) == 1);
  }
  auto pre = prefix_of(s, 5);
  CHECK(pre.bound == 5);
  REQUIRE(pre.members.size() == 1);
  CHECK(pre.members[0].first == 3);
  CHECK(sat(pre, 5));
  CHECK(sat(pre, 500));  // the prefix only knows positions up to its bound
}

TEST_CASE("inject_contradiction") {
  Formula a = parse_formula("(0=0)");
  ProofSource s = inject_contradiction(ProofSource{}, 5, a);
  CHECK(s.at(5) == a);
  CHECK(s.at(6) == Formula::neg(a));
  auto p = p_set(s, 6);
  CHECK(p.size() == 2);
  CHECK(!sat(s, 6));
  CHECK(!sat(s, 90));
  CHECK(sat(s, 5));

  ProofSource occupied = scripted_source({{6, a}});
  CHECK_THROWS_AS(inject_contradiction(occupied, 5, a), ScenarioError);
  CHECK_THROWS_AS(inject_contradiction(occupied, 6, a), ScenarioError);
}

TEST_CASE("axiom enumerator closes under modus ponens") {
  Formula a = parse_formula("R(0)");
  Formula b = parse_formula("R(S(0))");
  ProofSource s = axiom_enumerator_source({a, parse_formula("(R(0) -> R(S(0)))")});
  bool found = false;
  std::uint64_t at = 0;
  for (std::uint64_t y = 0; y < 1000; ++y) {
    auto f = s.at(y);
    if (f && *f == b) {
      found = true;
      at = y;
      break;
    }
  }
  CHECK(found);
  // axioms and template instances come first; the closure then yields B.
  // Recorded from a run of the fixed emission order.
  CHECK(at == 107);

  // axioms only template tautologies when empty
  ProofSource empty_ax = axiom_enumerator_source({});
  CHECK(!empty_ax.at(0).has_value());

  CHECK_THROWS_AS(axiom_enumerator_source({parse_formula("(x0=0)")}), ScenarioError);
}

TEST_CASE("enumerator never contradicts itself on satisfiable axioms") {
  ProofSource s = axiom_enumerator_source(
      {parse_formula("~R(0)"), parse_formula("(~R(0) -> ~R(S(0)))"), parse_formula("(0=0)")});
  FormulaSet seen;
  for (std::uint64_t y = 0; y < 1000; ++y) {
    auto f = s.at(y);
    if (!f) continue;
    CHECK(!set_contains(seen, Formula::neg(*f)));
    if (f->is_negation()) CHECK(!set_contains(seen, f->sub()));
    set_insert(seen, *f);
  }
  CHECK(seen.size() > 2);  // the closure actually produced something
}

TEST_CASE("scenario round trip and source assembly") {
  Scenario sc;
  sc.events = {{50, parse_formula("(0=0)")}, {559, parse_formula("~(0=0)")}};
  sc.inject = {{700, parse_formula("(0<=0)")}};
  sc.horizon = 900;
  auto j = scenario_to_json(sc);
  Scenario back = scenario_from_json(j);
  CHECK(back.events == sc.events);
  CHECK(back.inject == sc.inject);
  CHECK(back.horizon == sc.horizon);

  ProofSource s = build_source(sc);
  CHECK(s.at(50) == parse_formula("(0=0)"));
  CHECK(s.at(700) == parse_formula("(0<=0)"));
  CHECK(s.at(701) == parse_formula("~(0<=0)"));

  // enumerator output lands after the last scripted position
  Scenario with_enum;
  with_enum.events = {{10, parse_formula("(0=0)")}};
  with_enum.enumerator_axioms = {parse_formula("R(0)")};
  with_enum.horizon = 100;
  ProofSource merged = build_source(with_enum);
  CHECK(merged.at(10) == parse_formula("(0=0)"));
  CHECK(merged.at(11) == parse_formula("R(0)"));
}
