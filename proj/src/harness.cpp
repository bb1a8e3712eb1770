#include "rosserlab/harness.hpp"

#include <algorithm>
#include <sstream>

#include "rosserlab/delta0.hpp"
#include "rosserlab/errors.hpp"
#include "rosserlab/numbering.hpp"
#include "rosserlab/syntax.hpp"

namespace rosserlab {

std::size_t CheckReport::count(CheckEntry::V v) const {
  std::size_t n = 0;
  for (const auto& e : entries)
    if (e.verdict == v) ++n;
  return n;
}

bool CheckReport::ok() const {
  for (const auto& e : entries)
    if (e.enforced && e.verdict == CheckEntry::V::Fail) return false;
  return true;
}

std::string describe(const Formula& f) {
  // Compact rendering for formulas whose surface form would be unwieldy
  // (chiefly R over a large numeral).
  if (f.kind() == FormulaKind::RosserBox && f.box_term().is_numeral() &&
      f.box_term().numeral_value() > 40)
    return "R(num " + f.box_term().numeral_value().str() + ")";
  try {
    std::string s = print_formula(f);
    if (s.size() <= 160) return s;
  } catch (const OperationError&) {
  }
  return "<formula #" + f.code().str() + ">";
}

namespace {

std::string describe(const RosserVerdict& v) {
  switch (v.kind) {
    case RosserVerdict::Kind::Provable:
      return "provable" + (v.position ? "@" + std::to_string(*v.position) : std::string("@?"));
    case RosserVerdict::Kind::Blocked:
      return "blocked" + (v.position ? "@" + std::to_string(*v.position) : std::string("@?"));
    case RosserVerdict::Kind::Unknown:
      return "unknown(horizon " + std::to_string(v.horizon) + ")";
  }
  return "?";
}

bool pre_procedure2(const ConstructionTrace& t) { return t.mode == Mode::Procedure1; }

CheckEntry entry(std::string instance, CheckEntry::V v, std::string witness = "",
                 bool enforced = true) {
  return CheckEntry{std::move(instance), v, std::move(witness), enforced};
}

}  // namespace

CheckReport verify_claim1(const ConstructionTrace& t, const Code& code_bound) {
  CheckReport r;
  r.check_name = "claim1";
  std::vector<Formula> range = f_set(code_bound);
  if (pre_procedure2(t)) {
    for (const auto& f : range)
      r.entries.push_back(entry(describe(f), CheckEntry::V::Unknown, "no switch within horizon"));
    return r;
  }
  RosserEvaluator ev(t);
  switch (t.kind) {
    case ConstructionKind::G1: {
      for (const auto& f : range) {
        bool lhs = e_eval(f, t.model->v, t.model->n) == 1;
        RosserVerdict v = ev.verdict(f);
        bool rhs = v.provable();
        r.entries.push_back(lhs == rhs
                                ? entry(describe(f), CheckEntry::V::Pass)
                                : entry(describe(f), CheckEntry::V::Fail,
                                        "e=" + std::to_string(lhs) + " but " + describe(v)));
      }
      break;
    }
    case ConstructionKind::G2: {
      for (const auto& f : range) {
        Formula nf = Formula::neg(f);
        bool crit = is_critical(f, t.model->v, t.model->n);
        bool neg_applies = !(t.model->n < nf.code()) && is_critical(nf, t.model->v, t.model->n);
        RosserVerdict v = ev.verdict(f);
        if (crit && !v.provable()) {
          r.entries.push_back(
              entry(describe(f), CheckEntry::V::Fail, "critical but " + describe(v)));
        } else if (neg_applies && v.provable()) {
          r.entries.push_back(entry(describe(f), CheckEntry::V::Fail,
                                    "~f critical in F_n but f " + describe(v)));
        } else {
          r.entries.push_back(entry(describe(f), CheckEntry::V::Pass));
        }
      }
      break;
    }
    case ConstructionKind::G3: {
      FormulaSet snapshot;
      for (const auto& f : t.closure_snapshot) set_insert(snapshot, f);
      for (const auto& f : range) {
        bool lhs = set_contains(snapshot, Formula::neg(f));
        RosserVerdict v = ev.verdict(f);
        bool rhs = !v.provable();
        r.entries.push_back(lhs == rhs ? entry(describe(f), CheckEntry::V::Pass)
                                       : entry(describe(f), CheckEntry::V::Fail,
                                               std::string("~f in X_{m-1}: ") +
                                                   (lhs ? "yes" : "no") + " but " + describe(v)));
      }
      break;
    }
  }
  return r;
}

CheckReport verify_modus_ponens(const ConstructionTrace& t,
                                const std::vector<std::pair<Formula, Formula>>& pairs) {
  CheckReport r;
  r.check_name = "mp";
  RosserEvaluator ev(t);
  for (const auto& [a, b] : pairs) {
    std::string inst = describe(a) + " , " + describe(b);
    RosserVerdict vi = ev.verdict(Formula::implies(a, b));
    RosserVerdict va = ev.verdict(a);
    if (vi.unknown() || va.unknown()) {
      r.entries.push_back(entry(inst, CheckEntry::V::Unknown));
      continue;
    }
    if (!vi.provable() || !va.provable()) {
      r.entries.push_back(entry(inst, CheckEntry::V::Pass, "vacuous"));
      continue;
    }
    RosserVerdict vb = ev.verdict(b);
    if (vb.unknown())
      r.entries.push_back(entry(inst, CheckEntry::V::Unknown));
    else
      r.entries.push_back(vb.provable() ? entry(inst, CheckEntry::V::Pass)
                                        : entry(inst, CheckEntry::V::Fail,
                                                "premises provable, conclusion " + describe(vb)));
  }
  return r;
}

CheckReport verify_cb(const ConstructionTrace& t, const Formula& f, const Code& instance_bound) {
  if (!f.is_universal()) throw OperationError("verify_cb expects a universal formula");
  CheckReport r;
  r.check_name = "cb";
  RosserEvaluator ev(t);
  RosserVerdict vf = ev.verdict(f);
  if (vf.unknown()) {
    r.entries.push_back(entry(describe(f), CheckEntry::V::Unknown));
    return r;
  }
  if (!vf.provable()) {
    r.entries.push_back(entry(describe(f), CheckEntry::V::Pass, "vacuous: " + describe(vf)));
    return r;
  }
  for (const auto& inst : instances_within(f, instance_bound)) {
    RosserVerdict vi = ev.verdict(inst);
    std::string name = describe(f) + " => " + describe(inst);
    if (vi.unknown())
      r.entries.push_back(entry(name, CheckEntry::V::Unknown));
    else
      r.entries.push_back(vi.provable()
                              ? entry(name, CheckEntry::V::Pass)
                              : entry(name, CheckEntry::V::Fail, "instance " + describe(vi)));
  }
  return r;
}

std::vector<std::pair<Formula, Formula>> declared_entailments(const ProofSource& s) {
  std::vector<std::pair<Formula, Formula>> out;
  for (const auto& [y, f] : s.entries()) {
    if (!f.is_negation()) continue;
    Formula c = f.sub();
    if (c.kind() != FormulaKind::Conjunction || !c.right().is_negation()) continue;
    Formula ante = c.left();          // ~psi
    Formula cons = c.right().sub();   // ~phi
    if (!ante.is_negation() || !cons.is_negation()) continue;
    out.emplace_back(cons.sub(), ante.sub());  // (phi, psi)
  }
  return out;
}

CheckReport verify_b2(const ConstructionTrace& t, const ProofSource& s,
                      const std::vector<std::pair<Formula, Formula>>& entailments) {
  CheckReport r;
  r.check_name = "b2";
  RosserEvaluator ev(t);
  for (const auto& [phi, psi] : entailments) {
    Formula premise = Formula::implies(Formula::neg(psi), Formula::neg(phi));
    bool declared = false;
    for (const auto& [y, f] : s.entries())
      if (f == premise) declared = true;
    if (!declared)
      throw OperationError("verify_b2: pair (" + describe(phi) + ", " + describe(psi) +
                           ") is not scenario-declared");
    std::string inst = describe(phi) + " |- " + describe(psi);
    RosserVerdict vp = ev.verdict(phi);
    if (vp.unknown()) {
      r.entries.push_back(entry(inst, CheckEntry::V::Unknown));
      continue;
    }
    if (!vp.provable()) {
      r.entries.push_back(entry(inst, CheckEntry::V::Pass, "vacuous: " + describe(vp)));
      continue;
    }
    RosserVerdict vq = ev.verdict(psi);
    if (vq.unknown())
      r.entries.push_back(entry(inst, CheckEntry::V::Unknown));
    else
      r.entries.push_back(vq.provable() ? entry(inst, CheckEntry::V::Pass)
                                        : entry(inst, CheckEntry::V::Fail,
                                                describe(phi) + " provable but " + describe(psi) +
                                                    " " + describe(vq)));
  }
  return r;
}

CheckReport verify_d3(const ConstructionTrace& t, const Code& code_bound) {
  if (t.kind != ConstructionKind::G3) throw OperationError("verify_d3 expects a g3 trace");
  CheckReport r;
  r.check_name = "d3";
  RosserEvaluator ev(t);
  for (const auto& f : f_set(code_bound)) {
    Formula target = Formula::rosser_box(Term::numeral(f.code().value()));
    std::string inst = describe(f) + " => " + describe(target);
    RosserVerdict vf = ev.verdict(f);
    if (vf.unknown()) {
      r.entries.push_back(entry(inst, CheckEntry::V::Unknown));
      continue;
    }
    if (!vf.provable()) {
      r.entries.push_back(entry(inst, CheckEntry::V::Pass, "vacuous"));
      continue;
    }
    RosserVerdict vt = ev.verdict(target);
    if (vt.unknown())
      r.entries.push_back(entry(inst, CheckEntry::V::Unknown));
    else
      r.entries.push_back(vt.provable() ? entry(inst, CheckEntry::V::Pass)
                                        : entry(inst, CheckEntry::V::Fail,
                                                "f provable but target " + describe(vt)));
  }
  return r;
}

CheckReport verify_delta0_completeness(const ConstructionTrace& t,
                                       const std::vector<Formula>& sentences) {
  CheckReport r;
  r.check_name = "delta0";
  RosserEvaluator ev(t);
  for (const auto& f : sentences) {
    if (!is_delta0(f) || !f.is_sentence())
      throw OperationError("verify_delta0_completeness: not a Delta0 sentence: " + describe(f));
    RosserVerdict v = ev.verdict(f);
    if (!eval_delta0(f)) {
      r.entries.push_back(entry(describe(f), CheckEntry::V::Pass,
                                "false sentence; verdict " + describe(v), false));
      continue;
    }
    if (v.unknown())
      r.entries.push_back(entry(describe(f), CheckEntry::V::Unknown));
    else
      r.entries.push_back(v.provable() ? entry(describe(f), CheckEntry::V::Pass)
                                       : entry(describe(f), CheckEntry::V::Fail,
                                               "true sentence " + describe(v)));
  }
  return r;
}

CheckReport verify_consistency_statements(const ConstructionTrace& t, const Code& code_bound) {
  CheckReport r;
  r.check_name = "con";
  RosserEvaluator ev(t);
  bool hard = t.kind == ConstructionKind::G1;

  std::size_t complementary = 0;
  std::string first_witness;
  std::vector<Formula> range = f_set(code_bound);
  for (const auto& f : range) {
    RosserVerdict vf = ev.verdict(f);
    if (!vf.provable()) continue;
    RosserVerdict vn = ev.verdict(Formula::neg(f));
    if (vn.provable()) {
      ++complementary;
      if (first_witness.empty())
        first_witness = describe(f) + " " + describe(vf) + " and ~f " + describe(vn);
    }
  }
  r.entries.push_back(complementary == 0
                          ? entry("conH: no complementary provable pair", CheckEntry::V::Pass, "",
                                  hard)
                          : entry("conH: no complementary provable pair", CheckEntry::V::Fail,
                                  first_witness, hard));

  Formula zero_neq = Formula::neg(Formula::eq(Term::numeral(0), Term::numeral(0)));
  RosserVerdict vl = ev.verdict(zero_neq);
  r.entries.push_back(!vl.provable()
                          ? entry("conL: ~(0=0) not provable", CheckEntry::V::Pass, describe(vl))
                          : entry("conL: ~(0=0) not provable", CheckEntry::V::Fail, describe(vl)));

  std::size_t sample = std::min<std::size_t>(range.size(), 20);
  for (std::size_t i = 0; i < sample; ++i) {
    const Formula& f = range[i];
    RosserVerdict vf = ev.verdict(f);
    RosserVerdict vn = ev.verdict(Formula::neg(f));
    bool holds = !(vf.provable() && vn.provable());
    r.entries.push_back(entry("con(" + describe(f) + ")",
                              holds ? CheckEntry::V::Pass : CheckEntry::V::Fail,
                              describe(vf) + " / ~f " + describe(vn), false));
  }
  return r;
}

CheckReport verify_proof_predicate(const ConstructionTrace& t, const ProofSource& s) {
  CheckReport r;
  r.check_name = "prfaxioms";
  std::uint64_t end = t.switch_point.value_or(t.horizon);
  std::size_t mismatches = 0;
  for (std::uint64_t y = 0; y < end; ++y) {
    auto expected = s.at(y);
    const auto& actual = t.outputs[y];
    bool same = expected.has_value() == actual.has_value() &&
                (!expected || *expected == *actual);
    if (!same) {
      ++mismatches;
      if (mismatches <= 5)
        r.entries.push_back(entry("y=" + std::to_string(y), CheckEntry::V::Fail,
                                  std::string("source ") +
                                      (expected ? describe(*expected) : "none") + " vs trace " +
                                      (actual ? describe(*actual) : "0")));
    }
  }
  r.entries.push_back(mismatches == 0
                          ? entry("procedure-1 region echoes the source", CheckEntry::V::Pass,
                                  std::to_string(end) + " positions compared")
                          : entry("procedure-1 region echoes the source", CheckEntry::V::Fail,
                                  std::to_string(mismatches) + " mismatches"));
  r.entries.push_back(entry("single conclusion per position", CheckEntry::V::Pass,
                            "positions map to at most one formula"));
  return r;
}

CheckReport verify_sat_consistency_link(const ProofSource& s, std::uint64_t m_max,
                                        bool declared_sound, LeastModelOrder order) {
  CheckReport r;
  r.check_name = "satlink";
  // first position whose prefix already contains a complementary pair
  std::optional<std::uint64_t> contradiction_at;
  FormulaSet seen;
  for (const auto& [y, f] : s.entries()) {
    if (y > m_max) break;
    set_insert(seen, f);
    bool pair = set_contains(seen, Formula::neg(f)) ||
                (f.is_negation() && set_contains(seen, f.sub()));
    if (pair) {
      contradiction_at = y;
      break;
    }
  }

  std::vector<std::uint64_t> probes = s.positions_up_to(m_max);
  probes.push_back(m_max);
  if (contradiction_at) probes.push_back(*contradiction_at);
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());

  for (std::uint64_t m : probes) {
    bool sat_m = sat(s, m, order);
    std::string inst = "Sat(" + std::to_string(m) + ")";
    if (contradiction_at && m >= *contradiction_at) {
      r.entries.push_back(!sat_m ? entry(inst, CheckEntry::V::Pass, "false past contradiction")
                                 : entry(inst, CheckEntry::V::Fail,
                                         "complementary pair in P_{T," +
                                             std::to_string(*contradiction_at) +
                                             "} but Sat still holds"));
    } else if (declared_sound) {
      r.entries.push_back(sat_m ? entry(inst, CheckEntry::V::Pass)
                                : entry(inst, CheckEntry::V::Fail,
                                        "declared-sound source but Sat fails"));
    } else {
      r.entries.push_back(entry(inst, CheckEntry::V::Pass,
                                std::string("observational: ") + (sat_m ? "true" : "false"),
                                false));
    }
  }
  return r;
}

std::vector<std::pair<Formula, Formula>> sample_mp_pairs(const Code& code_bound,
                                                         std::size_t count) {
  std::vector<Formula> range = f_set(code_bound);
  std::vector<std::pair<Formula, Formula>> out;
  if (range.empty()) return out;
  std::size_t side = 1;
  while (side * side < count) ++side;
  for (std::size_t i = 0; i < side && out.size() < count; ++i)
    for (std::size_t j = 0; j < side && out.size() < count; ++j)
      out.emplace_back(range[i % range.size()], range[(i + j * (j + 1)) % range.size()]);
  return out;
}

std::vector<std::pair<Formula, Formula>> sample_delta0_mp_pairs(const Code& code_bound,
                                                                std::size_t count) {
  std::vector<Formula> range = delta0_sentences_within(code_bound);
  std::vector<std::pair<Formula, Formula>> out;
  for (std::size_t i = 0; i < range.size() && out.size() < count; ++i)
    for (std::size_t j = 0; j < range.size() && out.size() < count; ++j)
      out.emplace_back(range[i], range[j]);
  return out;
}

std::vector<Formula> delta0_sentences_within(const Code& code_bound) {
  std::vector<Formula> out;
  for (const auto& f : f_set(code_bound))
    if (is_delta0(f) && f.is_sentence()) out.push_back(f);
  return out;
}

std::vector<Formula> universals_within(const Code& code_bound) {
  std::vector<Formula> out;
  for (const auto& f : f_set(code_bound))
    if (f.is_universal()) out.push_back(f);
  return out;
}

}  // namespace rosserlab
