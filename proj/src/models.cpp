#include "rosserlab/models.hpp"

#include <algorithm>
#include <cassert>

#include "rosserlab/delta0.hpp"
#include "rosserlab/errors.hpp"
#include "rosserlab/instances.hpp"
#include "rosserlab/numbering.hpp"

namespace rosserlab {

TruthAssignment::TruthAssignment(Code domain_bound, std::vector<Formula> domain,
                                 std::vector<std::uint8_t> bits)
    : bound_(std::move(domain_bound)), domain_(std::move(domain)), bits_(std::move(bits)) {
  if (domain_.size() != bits_.size())
    throw OperationError("TruthAssignment: domain/bit size mismatch");
}

std::optional<int> TruthAssignment::value(const Code& c) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), c,
                             [](const Formula& f, const Code& v) { return f.code() < v; });
  if (it == domain_.end() || !(it->code() == c)) return std::nullopt;
  return bits_[static_cast<std::size_t>(it - domain_.begin())];
}

std::optional<int> TruthAssignment::value(const Formula& f) const { return value(f.code()); }

bool is_assignment(const std::map<Code, int>& candidate, const Code& m) {
  std::vector<Formula> domain = f_set(m);
  if (candidate.size() != domain.size()) return false;
  for (const auto& f : domain) {
    auto it = candidate.find(f.code());
    if (it == candidate.end()) return false;
    if (it->second != 0 && it->second != 1) return false;
  }
  for (const auto& f : domain) {
    int v = candidate.at(f.code());
    if (f.kind() == FormulaKind::Negation && v != 1 - candidate.at(f.sub().code())) return false;
    if (f.kind() == FormulaKind::Conjunction &&
        v != candidate.at(f.left().code()) * candidate.at(f.right().code()))
      return false;
  }
  return true;
}

bool satisfies_condition_a(const TruthAssignment& v) {
  for (const auto& f : v.domain()) {
    if (!f.is_universal()) continue;
    if (*v.value(f) != 1) continue;
    for (const auto& inst : instances_within(f, v.domain_bound()))
      if (*v.value(inst) != 1) return false;
  }
  return true;
}

bool satisfies_condition_b(const TruthAssignment& v) {
  for (std::size_t i = 0; i < v.domain().size(); ++i) {
    const Formula& f = v.domain()[i];
    if (is_delta0(f) && f.is_sentence()) {
      if ((v.value_at(i) == 1) != eval_delta0(f)) return false;
    }
  }
  return true;
}

bool is_model_of(const TruthAssignment& v, const std::vector<Formula>& xs) {
  if (v.domain_bound() < domain_bound(xs)) return false;
  for (const auto& f : xs)
    if (*v.value(f) != 1) return false;
  return true;
}

namespace {

// Lexicographic DPLL over the atoms of F_n in ascending code order, with
// structural coherence propagated both ways and condition (A) implications
// as triggers. The first solution found with the preferred bit tried first
// is the least assignment in the bit-string order.
class LeastModelSolver {
 public:
  LeastModelSolver(std::vector<Formula> domain, const std::vector<Formula>& xs, Conditions conds,
                   int preferred)
      : domain_(std::move(domain)), preferred_(preferred) {
    std::size_t n = domain_.size();
    val_.assign(n, -1);
    parents_.assign(n, {});
    impl_targets_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) index_[domain_[i].code()] = i;
    for (std::size_t i = 0; i < n; ++i) {
      const Formula& f = domain_[i];
      switch (f.kind()) {
        case FormulaKind::Negation:
          child1_.push_back(index_.at(f.sub().code()));
          child2_.push_back(SIZE_MAX);
          break;
        case FormulaKind::Conjunction:
          child1_.push_back(index_.at(f.left().code()));
          child2_.push_back(index_.at(f.right().code()));
          break;
        default:
          child1_.push_back(SIZE_MAX);
          child2_.push_back(SIZE_MAX);
          atoms_.push_back(i);
          break;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (child1_[i] != SIZE_MAX) parents_[child1_[i]].push_back(i);
      if (child2_[i] != SIZE_MAX) parents_[child2_[i]].push_back(i);
    }
    if (conds.a) {
      Code bound = domain_.empty() ? Code(0) : domain_.back().code();
      for (std::size_t i = 0; i < n; ++i) {
        if (!domain_[i].is_universal()) continue;
        for (const auto& inst : instances_within(domain_[i], bound))
          impl_targets_[i].push_back(index_.at(inst.code()));
      }
    }
    if (conds.b) {
      for (std::size_t i : atoms_) {
        const Formula& f = domain_[i];
        if (is_delta0(f) && f.is_sentence()) units_.emplace_back(i, eval_delta0(f) ? 1 : 0);
      }
    }
    for (const auto& x : xs) units_.emplace_back(index_.at(x.code()), 1);
  }

  std::optional<std::vector<std::uint8_t>> solve() {
    for (auto [i, v] : units_)
      if (!propagate(i, v)) return std::nullopt;
    if (!search()) return std::nullopt;
    std::vector<std::uint8_t> bits(domain_.size());
    for (std::size_t i = 0; i < domain_.size(); ++i) {
      assert(val_[i] == 0 || val_[i] == 1);
      bits[i] = static_cast<std::uint8_t>(val_[i]);
    }
    return bits;
  }

 private:
  std::vector<Formula> domain_;
  int preferred_;
  std::map<Code, std::size_t> index_;
  std::vector<std::int8_t> val_;
  std::vector<std::size_t> child1_, child2_;
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<std::vector<std::size_t>> impl_targets_;
  std::vector<std::size_t> atoms_;
  std::vector<std::pair<std::size_t, int>> units_;
  std::vector<std::size_t> trail_;

  bool set_value(std::size_t i, int v, std::vector<std::pair<std::size_t, int>>& queue) {
    if (val_[i] == v) return true;
    if (val_[i] == 1 - v) return false;
    val_[i] = static_cast<std::int8_t>(v);
    trail_.push_back(i);

    std::size_t a = child1_[i], b = child2_[i];
    if (domain_[i].kind() == FormulaKind::Negation) {
      queue.emplace_back(a, 1 - v);
    } else if (domain_[i].kind() == FormulaKind::Conjunction) {
      if (v == 1) {
        queue.emplace_back(a, 1);
        queue.emplace_back(b, 1);
      } else {
        if (val_[a] == 1) queue.emplace_back(b, 0);
        if (val_[b] == 1) queue.emplace_back(a, 0);
      }
    }
    for (std::size_t p : parents_[i]) {
      if (domain_[p].kind() == FormulaKind::Negation) {
        queue.emplace_back(p, 1 - v);
        continue;
      }
      std::size_t sib = child1_[p] == i ? child2_[p] : child1_[p];
      if (v == 0) {
        queue.emplace_back(p, 0);
      } else {
        if (val_[sib] == 1) queue.emplace_back(p, 1);
        if (val_[p] == 0 && val_[sib] == -1) queue.emplace_back(sib, 0);
        if (val_[p] == 1) queue.emplace_back(sib, 1);
      }
    }
    if (v == 1)
      for (std::size_t t : impl_targets_[i]) queue.emplace_back(t, 1);
    return true;
  }

  bool propagate(std::size_t i, int v) {
    std::vector<std::pair<std::size_t, int>> queue{{i, v}};
    while (!queue.empty()) {
      auto [j, w] = queue.back();
      queue.pop_back();
      if (!set_value(j, w, queue)) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      val_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  struct Decision {
    std::size_t cursor;
    std::size_t mark;
    bool tried_alt;
  };

  bool search() {
    std::vector<Decision> stack;
    std::size_t cursor = 0;
    while (true) {
      while (cursor < atoms_.size() && val_[atoms_[cursor]] != -1) ++cursor;
      if (cursor == atoms_.size()) {
        finalize();
        return true;
      }
      Decision d{cursor, trail_.size(), false};
      if (propagate(atoms_[cursor], preferred_)) {
        stack.push_back(d);
        ++cursor;
        continue;
      }
      undo(d.mark);
      if (propagate(atoms_[cursor], 1 - preferred_)) {
        d.tried_alt = true;
        stack.push_back(d);
        ++cursor;
        continue;
      }
      undo(d.mark);
      // backtrack to the most recent decision still holding an untried value
      bool resumed = false;
      while (!stack.empty()) {
        Decision back = stack.back();
        stack.pop_back();
        undo(back.mark);
        if (back.tried_alt) continue;
        if (propagate(atoms_[back.cursor], 1 - preferred_)) {
          back.tried_alt = true;
          stack.push_back(back);
          cursor = back.cursor + 1;
          resumed = true;
          break;
        }
        undo(back.mark);
      }
      if (!resumed && stack.empty()) return false;
    }
  }

  // With every atom decided the compounds are determined; propagation has
  // already pushed most of them, the rest are filled bottom-up.
  void finalize() {
    for (std::size_t i = 0; i < domain_.size(); ++i) {
      if (val_[i] != -1) continue;
      if (domain_[i].kind() == FormulaKind::Negation) {
        val_[i] = static_cast<std::int8_t>(1 - val_[child1_[i]]);
      } else if (domain_[i].kind() == FormulaKind::Conjunction) {
        val_[i] = static_cast<std::int8_t>(val_[child1_[i]] * val_[child2_[i]]);
      }
      trail_.push_back(i);
    }
  }

 public:
};

}  // namespace

std::optional<TruthAssignment> least_model(const std::vector<Formula>& xs, Conditions conds,
                                           LeastModelOrder order) {
  Code n = domain_bound(xs);
  std::vector<Formula> domain = f_set(n);
  int preferred = order == LeastModelOrder::Standard ? 0 : 1;
  LeastModelSolver solver(domain, xs, conds, preferred);
  auto bits = solver.solve();
  if (!bits) return std::nullopt;
  TruthAssignment v(n, std::move(domain), std::move(*bits));
  return v;
}

int e_eval(const Formula& f, const TruthAssignment& v, const Code& n) {
  if (!(v.domain_bound() == n)) return 0;  // V is not an assignment on F_n
  switch (f.kind()) {
    case FormulaKind::Negation:
      return 1 - e_eval(f.sub(), v, n);
    case FormulaKind::Conjunction:
      return e_eval(f.left(), v, n) * e_eval(f.right(), v, n);
    default: {
      if (!(n < f.code())) return *v.value(f);
      if (is_delta0(f) && f.is_sentence()) return eval_delta0(f) ? 1 : 0;
      return 1;
    }
  }
}

}  // namespace rosserlab
