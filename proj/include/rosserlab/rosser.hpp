#pragma once

#include <map>
#include <optional>

#include "rosserlab/construction.hpp"

namespace rosserlab {

// Verdict of the Rosser condition for a formula f over a trace: f has a
// witness position with no earlier occurrence of ~f (provable), or ~f comes
// first so no position can ever witness f (blocked), or the horizon cannot
// settle it (unknown; may resolve under a longer horizon). For traces that
// entered Procedure 2 the verdict is always total: guaranteed future output
// positions are computed from the recorded model/closure data.
struct RosserVerdict {
  enum class Kind { Provable, Blocked, Unknown };
  Kind kind = Kind::Unknown;
  // Witness y (provable) or the refuting position z (blocked). Unset when
  // the position lies beyond what the enumeration cap can index.
  std::optional<std::uint64_t> position;
  std::uint64_t horizon = 0;

  bool provable() const { return kind == Kind::Provable; }
  bool blocked() const { return kind == Kind::Blocked; }
  bool unknown() const { return kind == Kind::Unknown; }
};

// Caches per-trace occurrence data; cheap to query repeatedly.
class RosserEvaluator {
 public:
  explicit RosserEvaluator(const ConstructionTrace& t);

  RosserVerdict verdict(const Formula& f);

 private:
  struct Occurrence {
    bool exists = false;
    bool concrete = false;        // y holds a real trace position
    std::uint64_t y = 0;          // when concrete
    Code slot_code;               // emission round key otherwise
    int phase = 1;                // g2: 0 = swap-emitted negation, 1 = own round
  };

  Occurrence first_occurrence(const Formula& h);
  std::optional<std::uint64_t> materialize(const Occurrence& o);
  static bool before(const Occurrence& a, const Occurrence& b);

  bool swap_round(const Formula& k);
  std::optional<std::uint64_t> g2_round_position(std::uint64_t round, int phase);

  const ConstructionTrace& t_;
  std::map<Code, std::uint64_t> first_in_trace_;
  std::map<Code, std::size_t> chi_rank_;
  std::vector<int> swap_cache_;             // g2: 0/1 swap flag per round
};

RosserVerdict eval_rosser(const ConstructionTrace& t, const Formula& f);

// Prf over a trace: position y outputs the formula coded by x.
bool prf(const ConstructionTrace& t, const Code& x, std::uint64_t y);

}  // namespace rosserlab
