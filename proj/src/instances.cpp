#include "rosserlab/instances.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#include "rosserlab/errors.hpp"
#include "rosserlab/syntax.hpp"

namespace rosserlab {

namespace {

// Pending substitution while matching a matrix against a candidate: peeled
// variables map to the numeral value fixed at their first free occurrence.
struct Pending {
  std::map<std::uint64_t, std::optional<BigNat>> vars;
  std::set<std::uint64_t> shadowed;

  bool active(std::uint64_t v) const { return vars.count(v) > 0 && shadowed.count(v) == 0; }
};

bool match_term(const Term& pat, const Term& cand, Pending& p) {
  if (pat.kind() == TermKind::Variable && p.active(pat.var_index())) {
    if (!cand.is_numeral()) return false;
    auto& slot = p.vars[pat.var_index()];
    if (slot) return *slot == cand.numeral_value();
    slot = cand.numeral_value();
    return true;
  }
  if (pat.kind() != cand.kind()) return false;
  switch (pat.kind()) {
    case TermKind::Numeral:
      return pat.numeral_value() == cand.numeral_value();
    case TermKind::Variable:
      return pat.var_index() == cand.var_index();
    case TermKind::Successor:
      return match_term(pat.child(), cand.child(), p);
    case TermKind::Sum:
    case TermKind::Product:
      return match_term(pat.left(), cand.left(), p) && match_term(pat.right(), cand.right(), p);
  }
  return false;
}

bool match_formula(const Formula& pat, const Formula& cand, Pending& p) {
  if (pat.kind() != cand.kind()) return false;
  switch (pat.kind()) {
    case FormulaKind::Equal:
    case FormulaKind::LessEq:
      return match_term(pat.term_left(), cand.term_left(), p) &&
             match_term(pat.term_right(), cand.term_right(), p);
    case FormulaKind::RosserBox:
      return match_term(pat.box_term(), cand.box_term(), p);
    case FormulaKind::Negation:
      return match_formula(pat.sub(), cand.sub(), p);
    case FormulaKind::Conjunction:
      return match_formula(pat.left(), cand.left(), p) &&
             match_formula(pat.right(), cand.right(), p);
    case FormulaKind::Universal: {
      if (pat.bound_var() != cand.bound_var()) return false;
      bool newly_shadowed =
          p.vars.count(pat.bound_var()) > 0 && p.shadowed.insert(pat.bound_var()).second;
      bool ok = match_formula(pat.body(), cand.body(), p);
      if (newly_shadowed) p.shadowed.erase(pat.bound_var());
      return ok;
    }
  }
  return false;
}

}  // namespace

namespace {
std::atomic<InstanceConvention> g_convention{InstanceConvention::KAtLeastOne};
}  // namespace

InstanceConvention default_instance_convention() { return g_convention.load(); }
void set_default_instance_convention(InstanceConvention conv) { g_convention.store(conv); }

bool is_instance(const Formula& candidate, const Formula& f) {
  return is_instance(candidate, f, default_instance_convention());
}

bool is_instance(const Formula& candidate, const Formula& f, InstanceConvention conv) {
  if (conv == InstanceConvention::KMayBeZero && candidate == f) return true;
  Pending pending;
  Formula matrix = f;
  while (matrix.is_universal()) {
    pending.vars.insert_or_assign(matrix.bound_var(), std::nullopt);
    matrix = matrix.body();
    Pending attempt = pending;
    if (match_formula(matrix, candidate, attempt)) return true;
  }
  return false;
}

namespace {

// The cheapest way to finish a partial instantiation is substituting 0 for
// every remaining variable: numeral(0) has the least term code, so this
// lower-bounds every completion and gives a sound prune.
Code min_completion_code(Formula matrix, std::vector<std::uint64_t>::const_iterator v,
                         std::vector<std::uint64_t>::const_iterator vend) {
  for (; v != vend; ++v) matrix = substitute(matrix, *v, Term::numeral(0));
  return matrix.code();
}

// Numeral choices for the peeled variables of one k-peel, ascending per
// variable; substituting a larger numeral strictly grows both the partial
// formula and its minimal completion wherever the variable occurs.
void enumerate_assignments(const Formula& matrix, std::vector<std::uint64_t>::const_iterator v,
                           std::vector<std::uint64_t>::const_iterator vend, const Code& bound,
                           FormulaSet& out) {
  if (v == vend) {
    if (!(bound < matrix.code())) set_insert(out, matrix);
    return;
  }
  if (!matrix.free_vars().count(*v)) {
    enumerate_assignments(matrix, v + 1, vend, bound, out);
    return;
  }
  for (BigNat i = 0;; ++i) {
    Formula inst = substitute(matrix, *v, Term::numeral(i));
    if (bound < min_completion_code(inst, v + 1, vend)) break;
    enumerate_assignments(inst, v + 1, vend, bound, out);
  }
}

}  // namespace

std::vector<Formula> instances_within(const Formula& f, const Code& code_bound) {
  return instances_within(f, code_bound, default_instance_convention());
}

std::vector<Formula> instances_within(const Formula& f, const Code& code_bound,
                                      InstanceConvention conv) {
  FormulaSet found;
  if (conv == InstanceConvention::KMayBeZero && !(code_bound < f.code())) set_insert(found, f);
  std::vector<std::uint64_t> peeled;
  Formula matrix = f;
  while (matrix.is_universal()) {
    peeled.push_back(matrix.bound_var());
    matrix = matrix.body();
    // Sequential peel semantics: an inner peel of the same variable shadows
    // an outer one, so only the last peel of each variable substitutes.
    std::vector<std::uint64_t> effective;
    for (std::size_t i = 0; i < peeled.size(); ++i) {
      bool last = true;
      for (std::size_t j = i + 1; j < peeled.size(); ++j)
        if (peeled[j] == peeled[i]) last = false;
      if (last) effective.push_back(peeled[i]);
    }
    enumerate_assignments(matrix, effective.cbegin(), effective.cend(), code_bound, found);
  }
  std::vector<Formula> out;
  out.reserve(found.size());
  for (auto& [c, g] : found) out.push_back(g);
  return out;
}

}  // namespace rosserlab
