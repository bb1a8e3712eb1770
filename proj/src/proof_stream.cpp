#include "rosserlab/proof_stream.hpp"

#include <algorithm>
#include <deque>

#include "rosserlab/errors.hpp"
#include "rosserlab/syntax.hpp"

namespace rosserlab {

ProofSource::ProofSource(std::map<std::uint64_t, Formula> entries, std::string descriptor)
    : entries_(std::make_shared<const std::map<std::uint64_t, Formula>>(std::move(entries))),
      descriptor_(std::move(descriptor)) {}

std::optional<Formula> ProofSource::at(std::uint64_t y) const {
  auto it = entries_->find(y);
  if (it == entries_->end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint64_t> ProofSource::positions_up_to(std::uint64_t m) const {
  std::vector<std::uint64_t> out;
  for (const auto& [y, f] : *entries_) {
    if (y > m) break;
    out.push_back(y);
  }
  return out;
}

std::vector<Formula> p_set(const ProofSource& s, std::uint64_t m) {
  FormulaSet set;
  for (const auto& [y, f] : s.entries()) {
    if (y > m) break;
    set_insert(set, f);
  }
  std::vector<Formula> out;
  out.reserve(set.size());
  for (auto& [c, f] : set) out.push_back(f);
  return out;
}

ProofPrefix prefix_of(const ProofSource& s, std::uint64_t m) {
  ProofPrefix p;
  p.source = s;
  p.bound = m;
  for (const auto& [y, f] : s.entries()) {
    if (y > m) break;
    p.members.emplace_back(y, f);
  }
  return p;
}

ProofSource scripted_source(const std::vector<std::pair<std::uint64_t, Formula>>& events) {
  std::map<std::uint64_t, Formula> entries;
  for (const auto& [y, f] : events) {
    if (!entries.emplace(y, f).second)
      throw ScenarioError("scripted source: duplicate position " + std::to_string(y));
  }
  return ProofSource(std::move(entries), "scripted");
}

ProofSource inject_contradiction(const ProofSource& s, std::uint64_t at, const Formula& f) {
  std::map<std::uint64_t, Formula> entries = s.entries();
  if (entries.count(at) || entries.count(at + 1))
    throw ScenarioError("inject_contradiction: positions " + std::to_string(at) + "," +
                        std::to_string(at + 1) + " are occupied");
  entries.emplace(at, f);
  entries.emplace(at + 1, Formula::neg(f));
  return ProofSource(std::move(entries), s.descriptor() + "+inject");
}

namespace {

void collect_subformulas(const Formula& f, FormulaSet& out) {
  set_insert(out, f);
  switch (f.kind()) {
    case FormulaKind::Negation:
      collect_subformulas(f.sub(), out);
      return;
    case FormulaKind::Conjunction:
      collect_subformulas(f.left(), out);
      collect_subformulas(f.right(), out);
      return;
    case FormulaKind::Universal:
      collect_subformulas(f.body(), out);
      return;
    default:
      return;
  }
}

// Template metavariables: R(x98) = A, R(x99) = B.
Formula instantiate_template(const Formula& tpl, const Formula& a, const Formula& b) {
  switch (tpl.kind()) {
    case FormulaKind::RosserBox: {
      Term t = tpl.box_term();
      if (t.kind() == TermKind::Variable && t.var_index() == 98) return a;
      if (t.kind() == TermKind::Variable && t.var_index() == 99) return b;
      return tpl;
    }
    case FormulaKind::Negation:
      return Formula::neg(instantiate_template(tpl.sub(), a, b));
    case FormulaKind::Conjunction:
      return Formula::conj(instantiate_template(tpl.left(), a, b),
                           instantiate_template(tpl.right(), a, b));
    case FormulaKind::Universal:
      return Formula::forall(tpl.bound_var(), instantiate_template(tpl.body(), a, b));
    default:
      return tpl;
  }
}

// ~(p & ~q): returns (p, q).
std::optional<std::pair<Formula, Formula>> match_implication(const Formula& f) {
  if (!f.is_negation()) return std::nullopt;
  Formula c = f.sub();
  if (c.kind() != FormulaKind::Conjunction) return std::nullopt;
  if (!c.right().is_negation()) return std::nullopt;
  return std::make_pair(c.left(), c.right().sub());
}

}  // namespace

ProofSource axiom_enumerator_source(const std::vector<Formula>& axioms,
                                    const EnumeratorOptions& opts) {
  for (const auto& a : axioms)
    if (!a.is_sentence()) throw ScenarioError("enumerator axioms must be sentences");

  // Pool for template instantiation: the axioms' subformulas, ascending.
  FormulaSet pool_set;
  for (const auto& a : axioms) collect_subformulas(a, pool_set);
  std::vector<Formula> pool;
  for (auto& [c, f] : pool_set) {
    if (pool.size() >= opts.pool_limit) break;
    pool.push_back(f);
  }

  std::deque<Formula> seeds(axioms.begin(), axioms.end());
  for (const auto& t : opts.templates) {
    // Metavariable sugar: A and B in template text.
    std::string s = t;
    std::size_t p;
    while ((p = s.find('A')) != std::string::npos) s.replace(p, 1, "R(x98)");
    while ((p = s.find('B')) != std::string::npos) s.replace(p, 1, "R(x99)");
    Formula tpl = parse_formula(s);
    for (const auto& a : pool)
      for (const auto& b : pool) seeds.push_back(instantiate_template(tpl, a, b));
  }

  // Fair deterministic closure under modus ponens.
  std::vector<Formula> emitted;
  FormulaSet seen;
  while (!seeds.empty()) {
    Formula f = seeds.front();
    seeds.pop_front();
    if (set_contains(seen, f)) continue;
    set_insert(seen, f);
    emitted.push_back(f);
    for (const auto& g : emitted) {
      if (auto imp = match_implication(g); imp && imp->first == f) seeds.push_back(imp->second);
      if (auto imp = match_implication(f); imp && imp->first == g) seeds.push_back(imp->second);
    }
  }

  std::map<std::uint64_t, Formula> entries;
  std::uint64_t pos = opts.first_position;
  for (const auto& f : emitted) entries.emplace(pos++, f);
  return ProofSource(std::move(entries), "enumerator");
}

bool sat(const ProofSource& s, std::uint64_t m, LeastModelOrder order) {
  return least_model(p_set(s, m), Conditions{true, true}, order).has_value();
}

bool sat(const ProofPrefix& p, std::uint64_t m, LeastModelOrder order) {
  return sat(p.source, std::min(p.bound, m), order);
}

}  // namespace rosserlab
