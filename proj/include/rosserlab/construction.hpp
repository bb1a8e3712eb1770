#pragma once

#include <optional>
#include <vector>

#include "rosserlab/ast.hpp"
#include "rosserlab/models.hpp"
#include "rosserlab/proof_stream.hpp"

namespace rosserlab {

enum class ConstructionKind { G1, G2, G3 };
enum class Mode { Procedure1, Procedure2 };

const char* to_string(ConstructionKind k);
std::optional<ConstructionKind> construction_from_string(std::string_view s);

// Model data recorded when g1/g2 leave Procedure 1: n = d(P_{T,m-1}) and the
// least model V of P_{T,m-1} on F_n (condition (B) only for g1, (A) and (B)
// for g2).
struct ModelData {
  Code n;
  TruthAssignment v;
};

struct BellRecord {
  std::uint64_t stage = 0;
  int condition = 0;  // 1, 2 or 3
  Formula witness;
};

// The closure X_m of refuted formulas: level 0 collects the negations of
// P_{T,m} that lie in F_m, and each next level adds
//   - ~f in F_m when some instance of f is already refuted, and
//   - the consequent ~f (again clipped to F_m) of an implication
//     ~g -> ~f in P_{T,m} whose antecedent is already refuted.
// Clipping to F_m keeps X_m <= F_m even for sources whose stream positions
// are smaller than the codes they prove; for proof streams that respect
// code order the clip never bites.
struct ClosureSet {
  std::uint64_t base_bound = 0;    // m
  std::vector<FormulaSet> levels;  // cumulative, stable by |F_m| levels
  FormulaSet fixpoint;
};

struct ConstructionTrace {
  ConstructionKind kind = ConstructionKind::G1;
  std::uint64_t horizon = 0;
  std::vector<std::optional<Formula>> outputs;  // nullopt = the zero marker
  Mode mode = Mode::Procedure1;
  std::optional<std::uint64_t> switch_point;    // g1/g2 switch stage, g3 bell stage
  std::optional<ModelData> model;               // g1/g2
  std::optional<BellRecord> bell;               // g3
  std::vector<Formula> closure_snapshot;        // g3: X_{m-1}, ascending
  LeastModelOrder order = LeastModelOrder::Standard;
};

// Stage functions. Procedure 1 echoes the source while the respective
// health check holds; the first failing stage switches to Procedure 2,
// which enumerates formulas so that exactly one of f, ~f gains a Rosser
// witness (which one is decided by e/criticality/the closure snapshot).
ConstructionTrace run_g1(const ProofSource& s, std::uint64_t horizon,
                         LeastModelOrder order = LeastModelOrder::Standard);
ConstructionTrace run_g2(const ProofSource& s, std::uint64_t horizon,
                         LeastModelOrder order = LeastModelOrder::Standard);
ConstructionTrace run_g3(const ProofSource& s, std::uint64_t horizon,
                         LeastModelOrder order = LeastModelOrder::Standard);

// g2's output priority notion. Requires V to be an (A)&(B) model on F_n.
bool is_critical(const Formula& f, const TruthAssignment& v, const Code& n);

ClosureSet compute_X(const ProofSource& s, std::uint64_t m);

// First bell condition holding at stage m, with its witness:
//   1: X_m u P_{T,m} contains some f together with ~f;
//   2: some ~R(numeral(c)) in X_m decodes c to a formula f with ~f not in X_m;
//   3: some ~f in X_m has f a true Delta0 sentence.
std::optional<std::pair<int, Formula>> bell_condition(const ProofSource& s, std::uint64_t m);

}  // namespace rosserlab
