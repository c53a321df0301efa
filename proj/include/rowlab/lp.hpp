#pragma once

#include <string>
#include <vector>

#include "rowlab/stats.hpp"

namespace rowlab {

struct LpError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SymmetryMode { elements, antichains };
enum class OptimizeSense { minimize, maximize };

// Equality-constrained program over the simplex of distributions on an
// enumerated ideal list: weights >= 0, one normalization row, and one
// E[T_A] = 0 row per constraint antichain.
struct LinearProgram {
  std::vector<Bitset> ideals;
  std::vector<Bitset> constraint_antichains;     // may include the empty one
  std::vector<std::vector<Rational>> rows;       // per constraint, then norm
  std::vector<Rational> rhs;
  std::vector<Rational> objective;
  std::vector<std::string> row_labels;
};

LinearProgram build_symmetry_polytope(const Poset& p, SymmetryMode mode,
                                      std::size_t cap = kDefaultIdealCap);

struct OptimizeResult {
  Rational optimum;
  Distribution witness;
};

// Exact two-phase simplex with Bland's rule on a dense rational tableau.
OptimizeResult optimize(const LinearProgram& lp, OptimizeSense sense);

// Independent re-check that a witness satisfies every constraint exactly.
bool witness_feasible(const LinearProgram& lp, const Distribution& w);

struct DdegRange {
  Rational min, max, target;
  std::string verdict;  // "proven-at-size", "counterexample", "size-skipped"
  Distribution min_witness, max_witness;
};

// Extremes of expected down-degree over the symmetry polytope of the
// trapezoid; target is ab/(a+b).
DdegRange ddeg_range(int a, int b, SymmetryMode mode,
                     std::size_t cap = kDefaultIdealCap);

}  // namespace rowlab
