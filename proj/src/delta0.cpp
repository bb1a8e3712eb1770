#include "rosserlab/delta0.hpp"

#include "rosserlab/errors.hpp"
#include "rosserlab/syntax.hpp"

namespace rosserlab {

namespace {
// Bounds beyond this make a bounded quantifier loop unreasonable at desk scale.
const BigNat kQuantifierIterationGuard = 10000000;
}  // namespace

std::optional<BoundedUniversal> match_bounded_universal(const Formula& f) {
  if (!f.is_universal()) return std::nullopt;
  Formula b = f.body();
  if (!b.is_negation()) return std::nullopt;
  Formula c = b.sub();
  if (c.kind() != FormulaKind::Conjunction) return std::nullopt;
  Formula guard = c.left();
  if (guard.kind() != FormulaKind::LessEq) return std::nullopt;
  Term lhs = guard.term_left();
  if (lhs.kind() != TermKind::Variable || lhs.var_index() != f.bound_var()) return std::nullopt;
  if (guard.term_right().mentions_var(f.bound_var())) return std::nullopt;
  Formula r = c.right();
  if (!r.is_negation()) return std::nullopt;
  return BoundedUniversal{f.bound_var(), guard.term_right(), r.sub()};
}

bool is_delta0(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Equal:
    case FormulaKind::LessEq:
      return true;
    case FormulaKind::RosserBox:
      return false;
    case FormulaKind::Negation:
      return is_delta0(f.sub());
    case FormulaKind::Conjunction:
      return is_delta0(f.left()) && is_delta0(f.right());
    case FormulaKind::Universal: {
      auto bu = match_bounded_universal(f);
      return bu && is_delta0(bu->body);
    }
  }
  return false;
}

namespace {

bool eval_delta0_env(const Formula& f, TermEnv& env) {
  switch (f.kind()) {
    case FormulaKind::Equal:
      return eval_term(f.term_left(), env) == eval_term(f.term_right(), env);
    case FormulaKind::LessEq:
      return eval_term(f.term_left(), env) <= eval_term(f.term_right(), env);
    case FormulaKind::RosserBox:
      throw OperationError("eval_delta0 applied to a non-Delta0 formula");
    case FormulaKind::Negation:
      return !eval_delta0_env(f.sub(), env);
    case FormulaKind::Conjunction:
      return eval_delta0_env(f.left(), env) && eval_delta0_env(f.right(), env);
    case FormulaKind::Universal: {
      auto bu = match_bounded_universal(f);
      if (!bu) throw OperationError("eval_delta0 applied to an unbounded quantifier");
      BigNat bound = eval_term(bu->bound, env);
      if (bound > kQuantifierIterationGuard)
        throw DomainCapError("bounded quantifier range exceeds the iteration guard");
      auto saved = env.find(bu->var) != env.end() ? std::optional<BigNat>(env[bu->var])
                                                  : std::nullopt;
      bool ok = true;
      for (BigNat i = 0; i <= bound && ok; ++i) {
        env[bu->var] = i;
        // full body of the pattern: ~((xv <= t) & ~psi); with xv <= bound the
        // guard holds, so the body reduces to psi.
        ok = eval_delta0_env(bu->body, env);
      }
      if (saved)
        env[bu->var] = *saved;
      else
        env.erase(bu->var);
      return ok;
    }
  }
  throw OperationError("unreachable formula kind");
}

}  // namespace

bool eval_delta0(const Formula& sentence) {
  if (!is_delta0(sentence)) throw OperationError("eval_delta0 expects a Delta0 formula");
  if (!sentence.is_sentence()) throw OperationError("eval_delta0 expects a sentence");
  TermEnv env;
  return eval_delta0_env(sentence, env);
}

}  // namespace rosserlab
