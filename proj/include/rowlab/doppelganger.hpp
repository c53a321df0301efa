#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rowlab/hecke.hpp"
#include "rowlab/tableau.hpp"

namespace rowlab {

// Audit evidence: the box sets slid and the tableau after each slide.
struct SlideTrace {
  std::vector<std::pair<std::vector<Box>, IncreasingTableau>> steps;
};

// Rectification bijection from rectangle tableaux to trapezoid tableaux:
// embed as a shifted skew tableau, then slide along the minimal staircase
// schedule (largest staircase entry first).
IncreasingTableau phi(const IncreasingTableau& t, SlideTrace* trace = nullptr);

// Same map with the slide schedule read off an alternative straight shifted
// staircase tableau (caller asserts it is a unique rectification target).
IncreasingTableau phi_with_target(const IncreasingTableau& t,
                                  const IncreasingTableau& target);

// phi conjugated to order ideals through the rank shift.
Bitset phi_on_ideals(const ShapePoset& rect, const ShapePoset& trap,
                     const Bitset& ideal);
// ... and to arbitrary-height order-preserving maps.
PPartition phi_on_ppartition(const ShapePoset& rect, const ShapePoset& trap,
                             const PPartition& f);

enum class PairKind { rect_trap, q_i2, og612_h3 };
enum class AuditAction { rowmotion, pl_rowmotion };

struct CommuteViolation {
  std::string input;  // serialized point or ideal
  std::string lhs, rhs;
};

struct CommuteReport {
  bool commutes = false;
  std::size_t checked = 0;
  std::vector<CommuteViolation> violations;  // capped
  // exceptional pairs compare orbit-size multisets instead
  std::vector<std::size_t> orbit_sizes_left, orbit_sizes_right;
  std::string summary;
};

// Exhaustive commuting-square audit.
//  - rect_trap + rowmotion (height 1): checks phi o row = row o phi.
//  - rect_trap + pl_rowmotion (height >= 2): searches for a violation and
//    reports the first witnesses (the expected outcome at height >= 2).
//  - q_i2 / og612_h3: orbit-multiset comparison only.
CommuteReport commute_audit(PairKind pair, int a, int b, int height,
                            AuditAction action,
                            std::size_t max_witnesses = 3);

// Bounded check that no other straight shifted tableau shares the target's
// doubled Demazure invariant within the search bounds.
bool plausibly_unique_rectification_target(const IncreasingTableau& target,
                                           std::size_t max_states = 200000);

}  // namespace rowlab
