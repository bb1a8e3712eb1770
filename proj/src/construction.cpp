#include "rosserlab/construction.hpp"

#include <algorithm>
#include <deque>

#include "rosserlab/delta0.hpp"
#include "rosserlab/errors.hpp"
#include "rosserlab/instances.hpp"
#include "rosserlab/numbering.hpp"
#include "rosserlab/syntax.hpp"

namespace rosserlab {

const char* to_string(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::G1:
      return "g1";
    case ConstructionKind::G2:
      return "g2";
    case ConstructionKind::G3:
      return "g3";
  }
  return "?";
}

std::optional<ConstructionKind> construction_from_string(std::string_view s) {
  if (s == "g1") return ConstructionKind::G1;
  if (s == "g2") return ConstructionKind::G2;
  if (s == "g3") return ConstructionKind::G3;
  return std::nullopt;
}

bool is_critical(const Formula& f, const TruthAssignment& v, const Code& n) {
  if (!(n < f.code())) return *v.value(f) == 1;
  if (is_delta0(f) && f.is_sentence() && eval_delta0(f)) return true;
  for (std::size_t i = 0; i < v.domain().size(); ++i) {
    const Formula& psi = v.domain()[i];
    if (!psi.is_universal() || v.value_at(i) != 1) continue;
    if (is_instance(f, psi)) return true;
  }
  return false;
}

namespace {

// ~(a & ~b) viewed as an implication a -> b.
std::optional<std::pair<Formula, Formula>> match_implication(const Formula& f) {
  if (!f.is_negation()) return std::nullopt;
  Formula c = f.sub();
  if (c.kind() != FormulaKind::Conjunction) return std::nullopt;
  if (!c.right().is_negation()) return std::nullopt;
  return std::make_pair(c.left(), c.right().sub());
}

// One closure sweep of the X rules over the current set; returns the
// additions. `universals` lists (u, ~u) pairs from F_m with code(~u) <= m.
std::vector<Formula> closure_step(const FormulaSet& x, const std::vector<Formula>& p,
                                  const std::vector<std::pair<Formula, Formula>>& universals,
                                  const Code& m) {
  std::vector<Formula> added;
  for (const auto& [u, nu] : universals) {
    if (set_contains(x, nu)) continue;
    for (const auto& [c, chi] : x) {
      if (is_instance(chi.sub(), u)) {
        added.push_back(nu);
        break;
      }
    }
  }
  for (const auto& f : p) {
    auto imp = match_implication(f);
    if (!imp) continue;
    const auto& [antecedent, consequent] = *imp;
    if (!consequent.is_negation() || m < consequent.code()) continue;
    if (set_contains(x, consequent)) continue;
    if (x.count(antecedent.code())) added.push_back(consequent);
  }
  return added;
}

std::vector<std::pair<Formula, Formula>> refutable_universals(const Code& m) {
  std::vector<std::pair<Formula, Formula>> out;
  if (m.value() < 9) return out;
  for (const auto& u : f_set(Code(BigNat((m.value() - 9) / 11)))) {
    if (!u.is_universal()) continue;
    Formula nu = Formula::neg(u);
    if (!(m < nu.code())) out.emplace_back(u, nu);
  }
  return out;
}

FormulaSet closure_level0(const std::vector<Formula>& p, const Code& m) {
  FormulaSet x;
  for (const auto& f : p)
    if (f.is_negation() && !(m < f.code())) set_insert(x, f);
  return x;
}

FormulaSet close_over(FormulaSet x, const std::vector<Formula>& p,
                      const std::vector<std::pair<Formula, Formula>>& universals, const Code& m) {
  while (true) {
    auto added = closure_step(x, p, universals, m);
    if (added.empty()) return x;
    for (const auto& f : added) set_insert(x, f);
  }
}

std::optional<std::pair<int, Formula>> bell_over(const FormulaSet& x,
                                                 const std::vector<Formula>& p) {
  // condition 1 over X u P, ascending
  FormulaSet u = x;
  for (const auto& f : p) set_insert(u, f);
  for (const auto& [c, f] : u)
    if (set_contains(u, Formula::neg(f))) return std::make_pair(1, f);
  // condition 2: refuted Rosser atoms over formula codes
  for (const auto& [c, chi] : x) {
    Formula inner = chi.sub();  // members are negations
    if (inner.kind() != FormulaKind::RosserBox) continue;
    Term t = inner.box_term();
    if (!t.is_numeral()) continue;
    auto phi = decode_formula(Code(t.numeral_value()));
    if (!phi) continue;
    if (!set_contains(x, Formula::neg(*phi))) return std::make_pair(2, *phi);
  }
  // condition 3: refuted true Delta0 sentences
  for (const auto& [c, chi] : x) {
    Formula phi = chi.sub();
    if (is_delta0(phi) && phi.is_sentence() && eval_delta0(phi)) return std::make_pair(3, phi);
  }
  return std::nullopt;
}

}  // namespace

ClosureSet compute_X(const ProofSource& s, std::uint64_t m) {
  ClosureSet out;
  out.base_bound = m;
  std::vector<Formula> p = p_set(s, m);
  auto universals = refutable_universals(Code(m));
  FormulaSet x = closure_level0(p, Code(m));
  out.levels.push_back(x);
  while (true) {
    auto added = closure_step(x, p, universals, Code(m));
    if (added.empty()) break;
    for (const auto& f : added) set_insert(x, f);
    out.levels.push_back(x);
  }
  out.fixpoint = x;
  return out;
}

std::optional<std::pair<int, Formula>> bell_condition(const ProofSource& s, std::uint64_t m) {
  return bell_over(compute_X(s, m).fixpoint, p_set(s, m));
}

namespace {

// Shared Procedure 1 + switch for g1 and g2; the two differ only in the
// conditions of the least model and in Procedure 2's emission order.
ConstructionTrace run_g12(ConstructionKind kind, const ProofSource& s, std::uint64_t horizon,
                          LeastModelOrder order) {
  if (horizon < 1) throw ScenarioError("horizon must be >= 1");
  ConstructionTrace t;
  t.kind = kind;
  t.horizon = horizon;
  t.order = order;
  t.outputs.resize(horizon);

  bool sat_now = true;
  std::uint64_t round = 0;                // g1: next xi index
  std::deque<Formula> pending;            // g2: outputs owed by the current round
  for (std::uint64_t m = 0; m < horizon; ++m) {
    if (t.mode == Mode::Procedure1) {
      if (m == 0 || s.at(m).has_value()) sat_now = sat(s, m, order);
      if (sat_now) {
        t.outputs[m] = s.at(m);
        continue;
      }
      if (m == 0)
        throw ScenarioError("Sat fails already at stage 0; no previous model to continue from");
      std::vector<Formula> p = p_set(s, m - 1);
      Code n = domain_bound(p);
      Conditions conds = kind == ConstructionKind::G1 ? Conditions{false, true}
                                                      : Conditions{true, true};
      auto v = least_model(p, conds, order);
      if (!v)
        throw ScenarioError("no model of P_{T,m-1} although Sat(m-1) held");
      t.mode = Mode::Procedure2;
      t.switch_point = m;
      t.model = ModelData{n, std::move(*v)};
    }
    // Procedure 2 emission (also handles the switch stage itself).
    if (kind == ConstructionKind::G1) {
      Formula k = xi(round++);
      t.outputs[m] = e_eval(k, t.model->v, t.model->n) == 1 ? minus(k) : Formula::neg(k);
    } else {
      if (pending.empty()) {
        Formula k = xi(round++);
        Formula nk = Formula::neg(k);
        bool swap = !is_critical(k, t.model->v, t.model->n) &&
                    is_critical(nk, t.model->v, t.model->n);
        if (swap) pending.push_back(nk);
        pending.push_back(k);
      }
      t.outputs[m] = pending.front();
      pending.pop_front();
    }
  }
  return t;
}

}  // namespace

ConstructionTrace run_g1(const ProofSource& s, std::uint64_t horizon, LeastModelOrder order) {
  return run_g12(ConstructionKind::G1, s, horizon, order);
}

ConstructionTrace run_g2(const ProofSource& s, std::uint64_t horizon, LeastModelOrder order) {
  return run_g12(ConstructionKind::G2, s, horizon, order);
}

ConstructionTrace run_g3(const ProofSource& s, std::uint64_t horizon, LeastModelOrder order) {
  if (horizon < 1) throw ScenarioError("horizon must be >= 1");
  ConstructionTrace t;
  t.kind = ConstructionKind::G3;
  t.horizon = horizon;
  t.order = order;
  t.outputs.resize(horizon);

  // X_m and the bell verdict only change when P_{T,m} gains a member or a
  // new code enters F_m; between change points the previous values carry.
  std::vector<std::uint64_t> change_points = s.positions_up_to(horizon - 1);
  for (const auto& f : f_set(Code(horizon - 1))) change_points.push_back(f.code().to_u64());
  std::sort(change_points.begin(), change_points.end());
  change_points.erase(std::unique(change_points.begin(), change_points.end()),
                      change_points.end());
  std::size_t next_change = 0;

  FormulaSet x_cur;       // X_m for the last evaluated stage
  FormulaSet x_prev;      // X_{m-1}
  std::vector<Formula> p_cur;
  std::optional<std::pair<int, Formula>> bell_now;
  std::vector<Formula> chi;  // X_{m-1} snapshot at the bell, ascending
  std::uint64_t bell_stage = 0;

  for (std::uint64_t m = 0; m < horizon; ++m) {
    if (t.mode == Mode::Procedure1) {
      if (next_change < change_points.size() && change_points[next_change] == m) {
        ++next_change;
        x_prev = x_cur;  // X_{m-1}; X and the bell are constant between changes
        p_cur = p_set(s, m);
        auto universals = refutable_universals(Code(m));
        for (auto& [c, f] : closure_level0(p_cur, Code(m))) set_insert(x_cur, f);
        x_cur = close_over(std::move(x_cur), p_cur, universals, Code(m));
        bell_now = bell_over(x_cur, p_cur);
      }
      if (!bell_now) {
        t.outputs[m] = s.at(m);
        continue;
      }
      t.mode = Mode::Procedure2;
      bell_stage = m;
      t.bell = BellRecord{m, bell_now->first, bell_now->second};
      t.switch_point = m;
      for (auto& [c, f] : x_prev) chi.push_back(f);
      t.closure_snapshot = chi;
    }
    std::uint64_t i = m - bell_stage;
    t.outputs[m] = i < chi.size() ? chi[i] : xi(i - chi.size());
  }
  return t;
}

}  // namespace rosserlab
