#include "rosserlab/rosser.hpp"

#include <algorithm>

#include "rosserlab/errors.hpp"
#include "rosserlab/numbering.hpp"
#include "rosserlab/syntax.hpp"

namespace rosserlab {

RosserEvaluator::RosserEvaluator(const ConstructionTrace& t) : t_(t) {
  // Recorded outputs are the ground truth for everything inside the
  // horizon; emission slots below only extend the trace past it.
  for (std::uint64_t y = 0; y < t.outputs.size(); ++y) {
    if (!t.outputs[y]) continue;
    first_in_trace_.emplace(t.outputs[y]->code(), y);
  }
  for (std::size_t i = 0; i < t.closure_snapshot.size(); ++i)
    chi_rank_.emplace(t.closure_snapshot[i].code(), i);
}

bool RosserEvaluator::swap_round(const Formula& k) {
  return !is_critical(k, t_.model->v, t_.model->n) &&
         is_critical(Formula::neg(k), t_.model->v, t_.model->n);
}

// Exact position of g2's round r: m + r + (number of swap rounds before r),
// plus one more inside a swap round for the normally emitted formula.
std::optional<std::uint64_t> RosserEvaluator::g2_round_position(std::uint64_t round, int phase) {
  std::uint64_t extra = 0;
  try {
    while (swap_cache_.size() <= round) {
      Formula k = xi(swap_cache_.size());
      swap_cache_.push_back(swap_round(k) ? 1 : 0);
    }
  } catch (const DomainCapError&) {
    return std::nullopt;
  }
  for (std::uint64_t j = 0; j < round; ++j) extra += static_cast<std::uint64_t>(swap_cache_[j]);
  std::uint64_t pos = *t_.switch_point + round + extra;
  if (swap_cache_[round] && phase == 1) pos += 1;
  return pos;
}

RosserEvaluator::Occurrence RosserEvaluator::first_occurrence(const Formula& h) {
  Occurrence best;
  if (auto it = first_in_trace_.find(h.code()); it != first_in_trace_.end()) {
    best.exists = true;
    best.concrete = true;
    best.y = it->second;
  }
  // The chi block has exact positions even when the horizon truncates it.
  if (t_.kind == ConstructionKind::G3 && t_.switch_point) {
    if (auto it = chi_rank_.find(h.code()); it != chi_rank_.end()) {
      std::uint64_t pos = *t_.switch_point + it->second;
      if (!best.exists || pos < best.y) {
        best.exists = true;
        best.concrete = true;
        best.y = pos;
      }
    }
  }
  if (best.exists || t_.mode == Mode::Procedure1) return best;

  // No recorded occurrence: fall back to the guaranteed emission slot
  // beyond the horizon. Slot order is the emission order.
  auto consider_slot = [&](const Code& c, int phase) {
    if (!best.exists || c < best.slot_code || (c == best.slot_code && phase < best.phase)) {
      best.exists = true;
      best.concrete = false;
      best.slot_code = c;
      best.phase = phase;
    }
  };

  switch (t_.kind) {
    case ConstructionKind::G1: {
      int e = e_eval(h, t_.model->v, t_.model->n);
      if (e == 1 && !h.is_negation()) consider_slot(h.code(), 1);
      if (e == 0) consider_slot(Formula::neg(h).code(), 1);  // emitted as minus(~h)
      if (h.is_negation() && e == 1) consider_slot(h.sub().code(), 1);  // emitted as ~xi_k
      break;
    }
    case ConstructionKind::G2: {
      consider_slot(h.code(), 1);  // every formula is emitted at its own round
      if (h.is_negation() && swap_round(h.sub())) consider_slot(h.sub().code(), 0);
      break;
    }
    case ConstructionKind::G3:
      consider_slot(h.code(), 1);
      break;
  }
  return best;
}

bool RosserEvaluator::before(const Occurrence& a, const Occurrence& b) {
  // Exact positions precede every beyond-horizon slot.
  if (a.concrete && b.concrete) return a.y < b.y;
  if (a.concrete) return true;
  if (b.concrete) return false;
  if (a.slot_code != b.slot_code) return a.slot_code < b.slot_code;
  return a.phase < b.phase;
}

std::optional<std::uint64_t> RosserEvaluator::materialize(const Occurrence& o) {
  if (o.concrete) return o.y;
  std::uint64_t idx;
  try {
    auto f = decode_formula(o.slot_code);
    idx = index_of(*f);
  } catch (const DomainCapError&) {
    return std::nullopt;
  }
  switch (t_.kind) {
    case ConstructionKind::G1:
      return *t_.switch_point + idx;
    case ConstructionKind::G2:
      return g2_round_position(idx, o.phase);
    case ConstructionKind::G3:
      return *t_.switch_point + t_.closure_snapshot.size() + idx;
  }
  return std::nullopt;
}

RosserVerdict RosserEvaluator::verdict(const Formula& f) {
  Occurrence of = first_occurrence(f);
  Occurrence onf = first_occurrence(Formula::neg(f));
  RosserVerdict v;
  v.horizon = t_.horizon;
  if (!of.exists && !onf.exists) return v;  // unknown
  if (of.exists && (!onf.exists || before(of, onf))) {
    v.kind = RosserVerdict::Kind::Provable;
    v.position = materialize(of);
  } else {
    v.kind = RosserVerdict::Kind::Blocked;
    v.position = materialize(onf);
  }
  return v;
}

RosserVerdict eval_rosser(const ConstructionTrace& t, const Formula& f) {
  RosserEvaluator ev(t);
  return ev.verdict(f);
}

bool prf(const ConstructionTrace& t, const Code& x, std::uint64_t y) {
  if (y >= t.horizon) throw OperationError("prf: position beyond the trace horizon");
  const auto& out = t.outputs[y];
  return out.has_value() && out->code() == x;
}

}  // namespace rosserlab
