#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "rowlab/poset.hpp"

namespace rowlab {

struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ShapeKind { ordinary, shifted };

// Box in matrix-free coordinates: row 1 is the bottom row, columns grow to
// the right.  French reading (x, y) = (col, row).
struct Box {
  int row = 0;
  int col = 0;
  auto operator<=>(const Box&) const = default;
};

// Skew Young diagram lambda/mu.  Ordinary rows start at column 1; shifted
// row i starts at column i (so boxes satisfy row <= col).
class Shape {
 public:
  Shape() = default;
  Shape(ShapeKind kind, std::vector<int> outer, std::vector<int> inner = {});

  ShapeKind kind() const { return kind_; }
  const std::vector<int>& outer() const { return outer_; }
  const std::vector<int>& inner() const { return inner_; }
  int rows() const { return static_cast<int>(outer_.size()); }

  bool empty() const { return boxes_.empty(); }
  std::size_t box_count() const { return boxes_.size(); }
  // Row-major, bottom row first, left-to-right.  Canonical element order.
  const std::vector<Box>& boxes() const { return boxes_; }
  bool contains(Box b) const;

  // Ambient rank row+col-1, normalized so the minimum over the shape is 1.
  int rank(Box b) const;
  int max_rank() const;

  // Column range of row i (1-based), inclusive; empty rows give lo > hi.
  std::pair<int, int> row_span(int i) const;

  bool operator==(const Shape&) const = default;

 private:
  ShapeKind kind_ = ShapeKind::ordinary;
  std::vector<int> outer_, inner_;
  std::vector<Box> boxes_;
  int rank_offset_ = 0;
};

// Rebuilds a Shape from an explicit box set (used after slides).  Throws if
// the set is not a valid skew diagram for the given ambient.
Shape shape_from_boxes(ShapeKind kind, const std::vector<Box>& boxes);

// A shape together with its poset view (covers are unit steps).
struct ShapePoset {
  Shape shape;
  Poset poset;  // elements named "r,c", canonical row-major order
  int box_index(Box b) const;
  Box box_at(int i) const;
  Bitset box_set(const std::vector<Box>& bs) const;
};

ShapePoset make_shape_poset(const Shape& s);

ShapePoset rectangle(int a, int b);
ShapePoset trapezoid(int a, int b);
ShapePoset shape_from_partitions(ShapeKind kind, std::vector<int> outer,
                                 std::vector<int> inner);

// Named posets of the two exceptional doppelganger pairs, plus the
// double-tailed diamond q(n) and the near-chain i2(m).
Poset exceptional_poset(const std::string& name);
Poset exceptional_og612();
Poset exceptional_h3();
Poset double_tailed_diamond(int n);  // 2n elements
Poset near_chain_i2(int m);          // m elements

struct EmbeddedShape {
  ShapePoset shifted;
  // image_of[i] = shifted box corresponding to ordinary box i
  std::vector<Box> image_of;
};

// Realizes an ordinary n-row skew shape as a poset-isomorphic shifted skew
// shape; box (i, c) maps to (i, c + n - 1).
EmbeddedShape embed_ordinary_as_shifted(const ShapePoset& ordinary);

// All straight shapes (partitions / strict partitions) with at most
// `max_boxes` boxes, in a deterministic order.
std::vector<Shape> straight_shapes(ShapeKind kind, int max_boxes);

}  // namespace rowlab
