#include "rosserlab/numbering.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>

#include "rosserlab/errors.hpp"

namespace rosserlab {

namespace {

constexpr unsigned kLanes = 11;

unsigned lane_of(const BigNat& c) {
  auto r = static_cast<unsigned>(c % kLanes);
  return r == 0 ? kLanes : r;
}

std::optional<std::uint64_t> to_u64(const BigNat& v) {
  if (v < 0 || v > BigNat(UINT64_MAX)) return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

std::atomic<std::size_t> g_fn_cap{0};  // 0 = uninitialized

std::size_t read_cap_from_env() {
  if (const char* s = std::getenv("ROSSERLAB_FN_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

}  // namespace

std::size_t fn_cap() {
  std::size_t c = g_fn_cap.load();
  if (c == 0) {
    c = read_cap_from_env();
    g_fn_cap.store(c);
  }
  return c;
}

void set_fn_cap(std::size_t cap) { g_fn_cap.store(cap == 0 ? read_cap_from_env() : cap); }

std::optional<std::variant<Term, Formula>> decode(const Code& c) {
  const BigNat& v = c.value();
  if (v <= 0) return std::nullopt;
  unsigned tag = lane_of(v);
  BigNat body = (v - tag) / kLanes;
  switch (tag) {
    case 1:
      return Term::numeral(body);
    case 2: {
      auto i = to_u64(body);
      if (!i) return std::nullopt;
      return Term::variable(*i);
    }
    case 3: {
      auto t = decode_term(Code(body));
      if (!t || t->is_numeral()) return std::nullopt;
      return Term::successor(*t);
    }
    case 4:
    case 5: {
      auto [a, b] = cantor_unpair(body);
      auto ta = decode_term(Code(a));
      auto tb = decode_term(Code(b));
      if (!ta || !tb) return std::nullopt;
      return tag == 4 ? Term::sum(*ta, *tb) : Term::product(*ta, *tb);
    }
    case 6:
    case 7: {
      auto [a, b] = cantor_unpair(body);
      auto ta = decode_term(Code(a));
      auto tb = decode_term(Code(b));
      if (!ta || !tb) return std::nullopt;
      return tag == 6 ? Formula::eq(*ta, *tb) : Formula::leq(*ta, *tb);
    }
    case 8: {
      auto t = decode_term(Code(body));
      if (!t) return std::nullopt;
      return Formula::rosser_box(*t);
    }
    case 9: {
      auto f = decode_formula(Code(body));
      if (!f) return std::nullopt;
      return Formula::neg(*f);
    }
    case 10: {
      auto [a, b] = cantor_unpair(body);
      auto fa = decode_formula(Code(a));
      auto fb = decode_formula(Code(b));
      if (!fa || !fb) return std::nullopt;
      return Formula::conj(*fa, *fb);
    }
    case 11: {
      auto [a, b] = cantor_unpair(body);
      auto i = to_u64(a);
      auto fb = decode_formula(Code(b));
      if (!i || !fb) return std::nullopt;
      return Formula::forall(*i, *fb);
    }
  }
  return std::nullopt;
}

std::optional<Formula> decode_formula(const Code& c) {
  auto r = decode(c);
  if (!r || !std::holds_alternative<Formula>(*r)) return std::nullopt;
  return std::get<Formula>(*r);
}

std::optional<Term> decode_term(const Code& c) {
  auto r = decode(c);
  if (!r || !std::holds_alternative<Term>(*r)) return std::nullopt;
  return std::get<Term>(*r);
}

namespace {

// Largest s with s(s+1)/2 <= p: upper bound for a+b when pair(a,b) <= p.
BigNat pair_sum_bound(const BigNat& p) {
  BigNat t = 8 * p + 1;
  return (BigNat(boost::multiprecision::sqrt(t)) - 1) / 2;
}

void gen_terms(const BigNat& bound, std::vector<Term>& out);

void gen_pair_terms(const BigNat& bound, unsigned tag, std::vector<Term>& out) {
  if (bound < tag) return;
  BigNat p = (bound - tag) / kLanes;
  BigNat w = pair_sum_bound(p);
  std::vector<Term> subs;
  gen_terms(w, subs);
  for (const auto& a : subs) {
    for (const auto& b : subs) {
      if (a.code().value() + b.code().value() > w) break;  // subs ascend
      BigNat pr = cantor_pair(a.code().value(), b.code().value());
      if (pr > p) continue;
      out.push_back(tag == 4 ? Term::sum(a, b) : Term::product(a, b));
    }
  }
}

void gen_terms(const BigNat& bound, std::vector<Term>& out) {
  for (BigNat n = 0; kLanes * n + 1 <= bound; ++n) out.push_back(Term::numeral(n));
  for (BigNat i = 0; kLanes * i + 2 <= bound; ++i)
    out.push_back(Term::variable(static_cast<std::uint64_t>(i)));
  if (bound >= 3) {
    std::vector<Term> subs;
    gen_terms((bound - 3) / kLanes, subs);
    for (const auto& t : subs)
      if (!t.is_numeral()) out.push_back(Term::successor(t));
  }
  gen_pair_terms(bound, 4, out);
  gen_pair_terms(bound, 5, out);
  std::sort(out.begin(), out.end());
}

void gen_formulas(const BigNat& bound, std::vector<Formula>& out, std::size_t cap);

[[noreturn]] void throw_cap(std::size_t cap) {
  throw DomainCapError("F_n materialization would exceed the cap of " + std::to_string(cap) +
                       " formulas (set ROSSERLAB_FN_CAP to raise it)");
}

void check_cap(const std::vector<Formula>& out, std::size_t cap) {
  if (out.size() > cap) throw_cap(cap);
}

void gen_atom_formulas(const BigNat& bound, unsigned tag, std::vector<Formula>& out,
                       std::size_t cap) {
  if (bound < tag) return;
  BigNat p = (bound - tag) / kLanes;
  BigNat w = pair_sum_bound(p);
  std::vector<Term> subs;
  gen_terms(w, subs);
  for (const auto& a : subs) {
    for (const auto& b : subs) {
      if (a.code().value() + b.code().value() > w) break;
      if (cantor_pair(a.code().value(), b.code().value()) > p) continue;
      out.push_back(tag == 6 ? Formula::eq(a, b) : Formula::leq(a, b));
    }
    check_cap(out, cap);
  }
}

void gen_formulas(const BigNat& bound, std::vector<Formula>& out, std::size_t cap) {
  gen_atom_formulas(bound, 6, out, cap);
  gen_atom_formulas(bound, 7, out, cap);
  if (bound >= 8) {
    std::vector<Term> subs;
    gen_terms((bound - 8) / kLanes, subs);
    for (const auto& t : subs) out.push_back(Formula::rosser_box(t));
    check_cap(out, cap);
  }
  if (bound >= 9) {
    std::vector<Formula> subs;
    gen_formulas((bound - 9) / kLanes, subs, cap);
    for (const auto& f : subs) out.push_back(Formula::neg(f));
    check_cap(out, cap);
  }
  if (bound >= 10) {
    BigNat p = (bound - 10) / kLanes;
    BigNat w = pair_sum_bound(p);
    std::vector<Formula> subs;
    gen_formulas(w, subs, cap);
    for (const auto& a : subs) {
      for (const auto& b : subs) {
        if (a.code().value() + b.code().value() > w) break;
        if (cantor_pair(a.code().value(), b.code().value()) > p) continue;
        out.push_back(Formula::conj(a, b));
      }
      check_cap(out, cap);
    }
  }
  if (bound >= kLanes) {
    BigNat p = (bound - kLanes) / kLanes;
    BigNat w = pair_sum_bound(p);
    std::vector<Formula> subs;
    gen_formulas(w, subs, cap);
    if (!subs.empty()) {
      for (BigNat v = 0; v + subs.front().code().value() <= w; ++v) {
        for (const auto& b : subs) {
          if (v + b.code().value() > w) break;
          if (cantor_pair(v, b.code().value()) > p) continue;
          out.push_back(Formula::forall(static_cast<std::uint64_t>(v), b));
        }
        check_cap(out, cap);
      }
    }
  }
  check_cap(out, cap);
  std::sort(out.begin(), out.end());
}

struct EnumCache {
  std::mutex mu;
  std::vector<Formula> formulas;  // ascending, complete up to `covered`
  Code covered = Code(0);
  // Least bound known to blow the current cap; saves re-running an
  // aborted generation over and over.
  std::optional<std::pair<std::size_t, BigNat>> too_big;
};

EnumCache& cache() {
  static EnumCache c;
  return c;
}

// Ensures the cache covers codes <= bound; runs under the cache mutex.
// The cap differs by caller: f_set and index_of enforce the F_n
// materialization cap, while the xi stream may grow further (it indexes a
// linear enumeration, not a model-search domain).
void ensure_covered(EnumCache& c, const Code& bound, std::size_t cap) {
  if (bound <= c.covered) return;
  if (c.too_big && c.too_big->first == cap && c.too_big->second <= bound.value()) throw_cap(cap);
  std::vector<Formula> fresh;
  try {
    gen_formulas(bound.value(), fresh, cap);
  } catch (const DomainCapError&) {
    if (!c.too_big || c.too_big->first != cap || bound.value() < c.too_big->second)
      c.too_big = {cap, bound.value()};
    throw;
  }
  c.formulas = std::move(fresh);
  c.covered = bound;
}

std::size_t xi_cap() { return std::max<std::size_t>(fn_cap(), 1200000); }

}  // namespace

std::vector<Formula> f_set(const Code& m) {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  ensure_covered(c, m, fn_cap());
  auto it = std::upper_bound(c.formulas.begin(), c.formulas.end(), m,
                             [](const Code& v, const Formula& f) { return v < f.code(); });
  std::vector<Formula> out(c.formulas.begin(), it);
  if (out.size() > fn_cap())
    throw DomainCapError("F_n materialization would exceed the cap (" + std::to_string(out.size()) +
                         " formulas)");
  return out;
}

Formula xi(std::uint64_t k) {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  BigNat bound = c.covered.is_zero() ? BigNat(64) : c.covered.value();
  while (true) {
    ensure_covered(c, Code(bound), xi_cap());
    if (c.formulas.size() > k) return c.formulas[k];
    bound *= 2;
  }
}

std::uint64_t index_of(const Formula& f) {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  ensure_covered(c, f.code(), fn_cap());
  auto it = std::lower_bound(c.formulas.begin(), c.formulas.end(), f);
  if (it == c.formulas.end() || !(*it == f))
    throw OperationError("index_of: enumeration does not contain the formula");
  return static_cast<std::uint64_t>(it - c.formulas.begin());
}

Code domain_bound(const std::vector<Formula>& xs) {
  Code m(0);
  for (const auto& f : xs)
    if (m < f.code()) m = f.code();
  return m;
}

Code domain_bound(const FormulaSet& xs) {
  return xs.empty() ? Code(0) : xs.rbegin()->first;
}

Code dot_neg(const Code& c) {
  auto f = decode_formula(c);
  if (!f) throw OperationError("dot_neg: not the code of a formula");
  return Formula::neg(*f).code();
}

Code dot_imp(const Code& a, const Code& b) {
  auto fa = decode_formula(a);
  auto fb = decode_formula(b);
  if (!fa || !fb) throw OperationError("dot_imp: not codes of formulas");
  return Formula::implies(*fa, *fb).code();
}

Code rosser_box_code(const Code& c) {
  return Formula::rosser_box(Term::numeral(c.value())).code();
}

}  // namespace rosserlab
