#include <doctest.h>

#include <random>

#include "rosserlab/delta0.hpp"
#include "rosserlab/instances.hpp"
#include "rosserlab/models.hpp"
#include "rosserlab/numbering.hpp"
#include "rosserlab/proof_stream.hpp"
#include "rosserlab/syntax.hpp"

using namespace rosserlab;

namespace {

// Exhaustive least-model oracle: enumerate every coherent assignment over
// the free atoms of F_{d(X)} and take the minimum bit string. Only usable
// while the number of free atoms stays small.
std::optional<std::vector<std::uint8_t>> oracle_least_model(const std::vector<Formula>& xs,
                                                            Conditions conds,
                                                            LeastModelOrder order) {
  Code n = domain_bound(xs);
  std::vector<Formula> domain = f_set(n);
  std::vector<std::size_t> atoms;
  std::vector<int> fixed(domain.size(), -1);
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const Formula& f = domain[i];
    if (f.kind() == FormulaKind::Negation || f.kind() == FormulaKind::Conjunction) continue;
    if (conds.b && is_delta0(f) && f.is_sentence())
      fixed[i] = eval_delta0(f) ? 1 : 0;
    else
      atoms.push_back(i);
  }
  REQUIRE(atoms.size() <= 20);

  std::optional<std::vector<std::uint8_t>> best;
  for (std::uint64_t mask = 0; mask < (1ull << atoms.size()); ++mask) {
    std::vector<std::uint8_t> bits(domain.size(), 0);
    for (std::size_t i = 0; i < domain.size(); ++i)
      if (fixed[i] >= 0) bits[i] = static_cast<std::uint8_t>(fixed[i]);
    for (std::size_t k = 0; k < atoms.size(); ++k)
      bits[atoms[k]] = static_cast<std::uint8_t>((mask >> k) & 1);
    // extend through coherence bottom-up (children precede parents)
    std::map<Code, std::size_t> idx;
    for (std::size_t i = 0; i < domain.size(); ++i) idx[domain[i].code()] = i;
    for (std::size_t i = 0; i < domain.size(); ++i) {
      const Formula& f = domain[i];
      if (f.kind() == FormulaKind::Negation)
        bits[i] = static_cast<std::uint8_t>(1 - bits[idx.at(f.sub().code())]);
      if (f.kind() == FormulaKind::Conjunction)
        bits[i] = static_cast<std::uint8_t>(bits[idx.at(f.left().code())] *
                                            bits[idx.at(f.right().code())]);
    }
    TruthAssignment v(n, domain, bits);
    if (!is_model_of(v, xs)) continue;
    if (conds.a && !satisfies_condition_a(v)) continue;
    if (conds.b && !satisfies_condition_b(v)) continue;
    auto better = [&](const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
      return order == LeastModelOrder::Standard ? a < b : a > b;
    };
    if (!best || better(bits, *best)) best = bits;
  }
  return best;
}

TruthAssignment random_coherent_assignment(const Code& m, std::mt19937& rng) {
  std::vector<Formula> domain = f_set(m);
  std::vector<std::uint8_t> bits(domain.size(), 0);
  std::map<Code, std::size_t> idx;
  for (std::size_t i = 0; i < domain.size(); ++i) idx[domain[i].code()] = i;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const Formula& f = domain[i];
    if (f.kind() == FormulaKind::Negation)
      bits[i] = static_cast<std::uint8_t>(1 - bits[idx.at(f.sub().code())]);
    else if (f.kind() == FormulaKind::Conjunction)
      bits[i] = static_cast<std::uint8_t>(bits[idx.at(f.left().code())] *
                                          bits[idx.at(f.right().code())]);
    else
      bits[i] = static_cast<std::uint8_t>(rng() & 1);
  }
  return TruthAssignment(m, std::move(domain), std::move(bits));
}

}  // namespace

TEST_CASE("is_assignment checks totality and coherence") {
  CHECK(is_assignment({}, Code(0)));
  CHECK(!is_assignment({}, Code(50)));

  // all atoms 0, compounds extended coherently
  std::map<Code, int> good;
  for (const auto& f : f_set(Code(559))) {
    if (f.kind() == FormulaKind::Negation)
      good[f.code()] = 1 - good.at(f.sub().code());
    else if (f.kind() == FormulaKind::Conjunction)
      good[f.code()] = good.at(f.left().code()) * good.at(f.right().code());
    else
      good[f.code()] = 0;
  }
  CHECK(good.at(parse_formula("~(0=0)").code()) == 1);
  CHECK(is_assignment(good, Code(559)));

  auto bad = good;
  bad[parse_formula("(0=0)").code()] = 1;  // now V(~A) = V(A) = 1
  CHECK(!is_assignment(bad, Code(559)));

  auto out_of_range = good;
  out_of_range[parse_formula("(0=0)").code()] = 2;
  CHECK(!is_assignment(out_of_range, Code(559)));
}

TEST_CASE("conditions A and B against the brute-force scan") {
  std::mt19937 rng(20240817);
  Code m(2000);
  auto domain = f_set(m);
  for (int round = 0; round < 25; ++round) {
    TruthAssignment v = random_coherent_assignment(m, rng);
    bool oracle_a = true;
    for (const auto& f : domain)
      for (const auto& g : domain)
        if (*v.value(g) == 1 && is_instance(f, g) && *v.value(f) != 1) oracle_a = false;
    CHECK(satisfies_condition_a(v) == oracle_a);

    bool oracle_b = true;
    for (const auto& f : domain)
      if (is_delta0(f) && f.is_sentence() && (*v.value(f) == 1) != eval_delta0(f)) oracle_b = false;
    CHECK(satisfies_condition_b(v) == oracle_b);
  }
}

TEST_CASE("is_model_of") {
  auto v = least_model({parse_formula("(0=0)")}, Conditions{true, true});
  REQUIRE(v.has_value());
  CHECK(is_model_of(*v, {}));
  CHECK(is_model_of(*v, {parse_formula("(0=0)")}));
  // d(X) beyond the domain bound
  CHECK(!is_model_of(*v, {parse_formula("~(0=0)")}));
}

TEST_CASE("least_model basics") {
  auto empty = least_model({}, Conditions{true, true});
  REQUIRE(empty.has_value());
  CHECK(empty->domain().empty());
  CHECK(empty->domain_bound() == Code(0));

  CHECK(!least_model({parse_formula("~(0=0)")}, Conditions{false, true}).has_value());
  CHECK(!least_model({parse_formula("((0=0)&~(0=0))")}, Conditions{false, false}).has_value());

  // least (B)-model of {(0=0)} on F_50: free R-atoms take 0
  auto v = least_model({parse_formula("(0=0)")}, Conditions{false, true});
  REQUIRE(v.has_value());
  REQUIRE(v->domain().size() == 3);
  CHECK(*v->value(parse_formula("R(0)")) == 0);
  CHECK(*v->value(parse_formula("R(x0)")) == 0);
  CHECK(*v->value(parse_formula("(0=0)")) == 1);
}

TEST_CASE("least_model equals the exhaustive oracle") {
  std::vector<std::vector<Formula>> cases = {
      {parse_formula("(0=0)")},
      {parse_formula("R(0)")},
      {parse_formula("~R(0)")},
      {parse_formula("(0<=0)")},
      {parse_formula("~R(x0)")},
      {parse_formula("R(0)"), parse_formula("~R(x0)")},
  };
  for (const auto& xs : cases) {
    for (Conditions conds : {Conditions{false, false}, Conditions{false, true},
                             Conditions{true, true}}) {
      for (auto order : {LeastModelOrder::Standard, LeastModelOrder::Reversed}) {
        CAPTURE(xs.size());
        auto got = least_model(xs, conds, order);
        auto want = oracle_least_model(xs, conds, order);
        REQUIRE(got.has_value() == want.has_value());
        if (got) CHECK(got->bits() == *want);
      }
    }
  }
  // an unsatisfiable mix under (B)
  auto none = least_model({parse_formula("~(0<=0)")}, Conditions{true, true});
  auto oracle_none = oracle_least_model({parse_formula("~(0<=0)")}, Conditions{true, true},
                                        LeastModelOrder::Standard);
  CHECK(!none.has_value());
  CHECK(!oracle_none.has_value());
}

TEST_CASE("least model with condition A propagates universal truths") {
  // force all x0 R(x0) true; instances must follow under (A)
  auto v = least_model({parse_formula("all x0 R(x0)")}, Conditions{true, true});
  REQUIRE(v.has_value());
  CHECK(satisfies_condition_a(*v));
  CHECK(satisfies_condition_b(*v));
  CHECK(*v->value(parse_formula("R(0)")) == 1);
  CHECK(*v->value(parse_formula("R(S(0))")) == 1);
  // without (A) the least model keeps instances at 0
  auto w = least_model({parse_formula("all x0 R(x0)")}, Conditions{false, true});
  REQUIRE(w.has_value());
  CHECK(*w->value(parse_formula("R(0)")) == 0);
}

TEST_CASE("sat probes") {
  ProofSource empty;
  CHECK(sat(empty, 0));
  CHECK(sat(empty, 100));

  ProofSource contra = scripted_source({{3, parse_formula("(0=0)")},
                                        {4, parse_formula("~(0=0)")}});
  CHECK(sat(contra, 3));
  CHECK(!sat(contra, 4));
  CHECK(!sat(contra, 50));  // antitone across the contradiction

  ProofSource truths = scripted_source({{10, parse_formula("(0=0)")},
                                        {11, parse_formula("(0<=0)")},
                                        {12, parse_formula("~(S(0)=0)")}});
  for (std::uint64_t m : {0, 10, 11, 12, 40}) CHECK(sat(truths, m));
}

TEST_CASE("e_eval follows the recursion") {
  auto v = least_model({parse_formula("(0=0)")}, Conditions{false, true});
  REQUIRE(v.has_value());
  Code n = v->domain_bound();
  REQUIRE(n == Code(50));

  // on F_n the evaluator returns V
  for (const auto& f : v->domain()) CHECK(e_eval(f, *v, n) == *v->value(f));

  // outside F_n: Delta0 sentences evaluate, everything else defaults to 1
  CHECK(e_eval(parse_formula("(S(0)=0)"), *v, n) == 0);
  CHECK(e_eval(parse_formula("(0<=0)"), *v, n) == 1);
  CHECK(e_eval(parse_formula("all x0 (x0=x0)"), *v, n) == 1);
  CHECK(e_eval(parse_formula("R(S(0))"), *v, n) == 1);

  // negation and conjunction recurse through the bit algebra everywhere
  for (const auto& f : f_set(Code(2000))) {
    CHECK(e_eval(Formula::neg(f), *v, n) == 1 - e_eval(f, *v, n));
    CHECK(e_eval(Formula::conj(f, parse_formula("(0=0)")), *v, n) ==
          e_eval(f, *v, n) * e_eval(parse_formula("(0=0)"), *v, n));
  }

  // V that is not an assignment on F_n yields 0 outright
  CHECK(e_eval(parse_formula("(0=0)"), *v, Code(51)) == 0);
}
