#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <string>
#include <vector>

#include "rowlab/shape.hpp"
#include "rowlab/tableau.hpp"

namespace rowlab {

using Rational = boost::multiprecision::cpp_rational;

struct StatsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Number of maximal elements of the ideal (antichain cardinality).
int down_degree(const Poset& p, const Bitset& ideal);

// Binary itinerary of the bottom-row corner box (1,b) along the inverse
// rowmotion trajectory; length a+b, with a zeros and b ones.  Rowmotion
// corresponds to one-step rightward rotation.
std::vector<int> stanley_thomas(const ShapePoset& rect, const Bitset& ideal);

struct Toggleability {
  int plus = 0;   // antichain can be toggled into the ideal
  int minus = 0;  // antichain can be toggled out of the ideal
  int net() const { return plus - minus; }
};

Toggleability toggleability(const Poset& p, const Bitset& antichain,
                            const Bitset& ideal);

// Signed coefficients of the rook combination centered at (i,j) of the
// trapezoid; `pair_coeff` addresses the adjacent-maximal-pair antichains.
struct RookCoefficients {
  std::vector<int> minus, plus;  // per box, canonical order
  std::vector<int> pair_coeff;   // index i' in [1, a-1]
};

RookCoefficients rook_coefficients(const ShapePoset& trap, int a, int b,
                                   Box square);
Rational rook_statistic(const ShapePoset& trap, int a, int b, Box square,
                        const Bitset& ideal);

// Exact weights over an enumerated ideal list; must sum to 1.
struct Distribution {
  std::vector<Rational> weights;
};

using IdealStatistic = std::function<Rational(const Bitset&)>;

Rational expectation(const std::vector<Bitset>& ideals, const Distribution& mu,
                     const IdealStatistic& f);

Distribution orbit_uniform(const Poset& p, const std::vector<Bitset>& ideals,
                           const Bitset& seed);

// E[T_A] over mu, by antichain.
Rational expected_toggle(const Poset& p, const std::vector<Bitset>& ideals,
                         const Distribution& mu, const Bitset& antichain,
                         int sign /* +1, -1, or 0 for net */);

struct HomomesyOrbitRow {
  std::size_t orbit_id = 0;
  std::size_t size = 0;
  Rational stat_sum;
  Rational average;
};

struct HomomesyReport {
  std::vector<HomomesyOrbitRow> orbits;
  Rational global_average;
  bool homomesic = false;
  std::vector<std::size_t> witness_orbits;  // orbits off the global average
};

HomomesyReport homomesy_audit(const Poset& p, const IdealStatistic& f,
                              std::size_t cap = kDefaultIdealCap);

// Point of the order polytope: order-preserving values in [0,1].
struct PolytopePoint {
  std::vector<Rational> values;  // by poset element
};

bool in_order_polytope(const Poset& p, const PolytopePoint& f);
PolytopePoint pl_toggle(const Poset& p, const PolytopePoint& f, int e);
PolytopePoint pl_rowmotion(const Poset& p, const PolytopePoint& f);
PolytopePoint pl_rowmotion(const Poset& p, const PolytopePoint& f,
                           const std::vector<int>& extension);

// Lattice form on order-preserving maps into {0..height}.
PPartition pl_rowmotion_ppartition(const ShapePoset& sp, const PPartition& f);

}  // namespace rowlab
