#pragma once

#include <map>
#include <vector>

#include "rowlab/shape.hpp"

namespace rowlab {

struct TableauError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Transient filling used inside slides; entry 0 encodes a bullet.
using Filling = std::map<Box, int>;
inline constexpr int kBullet = 0;

// Strictly increasing filling of a (possibly skew) shape over {1..ell}.
class IncreasingTableau {
 public:
  IncreasingTableau() = default;
  IncreasingTableau(ShapeKind kind, Filling entries, int ell);

  ShapeKind kind() const { return kind_; }
  int ell() const { return ell_; }
  const Filling& entries() const { return entries_; }
  int at(Box b) const;
  bool has(Box b) const { return entries_.count(b) > 0; }
  Shape shape() const { return shape_; }
  std::size_t box_count() const { return entries_.size(); }

  // Rows bottom-up as dense vectors (for display/serialization).
  std::vector<std::vector<int>> rows_bottom_up() const;

  bool operator==(const IncreasingTableau&) const = default;

 private:
  ShapeKind kind_ = ShapeKind::ordinary;
  Filling entries_;
  int ell_ = 0;
  Shape shape_;
};

// Convenience constructor from bottom-up row lists on a straight or skew
// shape; row i of an ordinary shape starts at column offsets[i]+1, shifted
// rows at column i+offsets[i].
IncreasingTableau tableau_from_rows(ShapeKind kind,
                                    const std::vector<std::vector<int>>& rows,
                                    const std::vector<int>& offsets = {},
                                    int ell = 0);

// Simultaneous two-entry relabel: every b-box with an a-neighbor becomes a,
// every a-box with a b-neighbor becomes b (adjacency = ambient covers).
Filling swap_entries(const Filling& f, int a, int b);

// Forward slide of C (maximal boxes of the inner shape); bullets removed.
IncreasingTableau kjdt_forward(const IncreasingTableau& t,
                               const std::vector<Box>& c);
// Reverse slide of C' (minimal boxes of the ambient above the outer shape).
IncreasingTableau kjdt_reverse(const IncreasingTableau& t,
                               const std::vector<Box>& c);

// Admissible slide seeds: maximal boxes of the inner shape, and minimal
// ambient boxes above the outer shape.
std::vector<Box> inner_slide_boxes(const IncreasingTableau& t);
std::vector<Box> outer_slide_boxes(const IncreasingTableau& t);

// Remove 1s, decrement, rectify from the vacated boxes, refill with ell.
IncreasingTableau k_promotion(const IncreasingTableau& t);

// Local exchange of i and i+1 (comparisons in the full box order).
IncreasingTableau kbk(const IncreasingTableau& t, int i);

// k_promotion computed as kbk_{ell-1} o ... o kbk_1.
IncreasingTableau k_promotion_via_kbk(const IncreasingTableau& t);

// Rows top to bottom, left to right within each row.
std::vector<int> reading_word(const IncreasingTableau& t);

// Sub-tableau on boxes valued in [lo, hi]; labels kept.
IncreasingTableau restrict_tableau(const IncreasingTableau& t, int lo, int hi);

// Reflect a straight shifted tableau across the diagonal.
IncreasingTableau double_tableau(const IncreasingTableau& t);
// Reading word of the doubled box set (defined for skew shifted inputs too).
std::vector<int> doubled_reading_word(const IncreasingTableau& t);

// Order-preserving map from a shape poset into {0..height}.
struct PPartition {
  std::vector<int> values;  // indexed by shape-poset element
  int height = 1;
};

PPartition ppartition_from_ideal(const ShapePoset& sp, const Bitset& ideal);
Bitset ideal_from_ppartition(const ShapePoset& sp, const PPartition& f);
bool is_order_preserving(const ShapePoset& sp, const PPartition& f);
std::vector<PPartition> enumerate_ppartitions(const ShapePoset& sp, int height);

// Adds rank to a P-partition (graded shapes only): PP^m -> IT^{m+rmax}.
IncreasingTableau rank_shift_to_tableau(const ShapePoset& sp,
                                        const PPartition& f);
// Inverse; errors if some entry minus rank falls outside [0, height].
PPartition rank_shift_to_ppartition(const ShapePoset& sp,
                                    const IncreasingTableau& t, int height);

// Product of toggles over all rank-i elements (they commute).
Bitset rank_toggle_product(const ShapePoset& sp, const Bitset& ideal, int i);

// All increasing tableaux of the shape with entries in {1..ell}.
std::vector<IncreasingTableau> enumerate_tableaux(const ShapePoset& sp,
                                                  int ell);

}  // namespace rowlab
