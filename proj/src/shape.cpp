#include "rowlab/shape.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace rowlab {

namespace {

void validate_partition(ShapeKind kind, const std::vector<int>& parts,
                        const char* what) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw ShapeError(std::string(what) + ": negative part");
    if (i + 1 < parts.size()) {
      if (parts[i] < parts[i + 1])
        throw ShapeError(std::string(what) + ": parts must decrease upward");
      if (kind == ShapeKind::shifted && parts[i + 1] > 0 &&
          parts[i] == parts[i + 1])
        throw ShapeError(std::string(what) +
                         ": shifted parts must strictly decrease");
    }
  }
}

std::vector<int> strip_trailing_zeros(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

Shape::Shape(ShapeKind kind, std::vector<int> outer, std::vector<int> inner)
    : kind_(kind),
      outer_(strip_trailing_zeros(std::move(outer))),
      inner_(strip_trailing_zeros(std::move(inner))) {
  validate_partition(kind_, outer_, "outer");
  validate_partition(kind_, inner_, "inner");
  if (inner_.size() > outer_.size())
    throw ShapeError("inner partition has more rows than outer");
  for (std::size_t i = 0; i < inner_.size(); ++i)
    if (inner_[i] > outer_[i]) throw ShapeError("inner not contained in outer");
  int min_amb = 0;
  bool first = true;
  for (int i = 1; i <= rows(); ++i) {
    auto [lo, hi] = row_span(i);
    for (int c = lo; c <= hi; ++c) {
      boxes_.push_back({i, c});
      if (first || i + c < min_amb) min_amb = i + c, first = false;
    }
  }
  std::sort(boxes_.begin(), boxes_.end());
  rank_offset_ = min_amb;  // rank = row+col - offset + 1, minimum 1
}

std::pair<int, int> Shape::row_span(int i) const {
  const int start = (kind_ == ShapeKind::shifted) ? i : 1;
  const int out = outer_[i - 1];
  const int inn = (i <= static_cast<int>(inner_.size())) ? inner_[i - 1] : 0;
  return {start + inn, start + out - 1};
}

bool Shape::contains(Box b) const {
  if (b.row < 1 || b.row > rows()) return false;
  auto [lo, hi] = row_span(b.row);
  return b.col >= lo && b.col <= hi;
}

int Shape::rank(Box b) const {
  if (!contains(b)) throw ShapeError("rank: box outside shape");
  return b.row + b.col - rank_offset_ + 1;
}

int Shape::max_rank() const {
  int m = 0;
  for (const Box& b : boxes_) m = std::max(m, rank(b));
  return m;
}

Shape shape_from_boxes(ShapeKind kind, const std::vector<Box>& boxes) {
  if (boxes.empty()) return Shape(kind, {});
  int nrows = 0;
  for (const Box& b : boxes) nrows = std::max(nrows, b.row);
  std::vector<int> lo(nrows + 1, 0), hi(nrows + 1, -1);
  for (const Box& b : boxes) {
    if (b.row < 1 || b.col < 1) throw ShapeError("box outside ambient");
    if (kind == ShapeKind::shifted && b.col < b.row)
      throw ShapeError("box below the shifted diagonal");
    if (hi[b.row] < 0) {
      lo[b.row] = hi[b.row] = b.col;
    } else {
      lo[b.row] = std::min(lo[b.row], b.col);
      hi[b.row] = std::max(hi[b.row], b.col);
    }
  }
  std::vector<int> outer(nrows, 0), inner(nrows, 0);
  // Contiguity per row, then partition constraints, checked via Shape().
  std::size_t total = 0;
  for (int i = 1; i <= nrows; ++i) {
    const int start = (kind == ShapeKind::shifted) ? i : 1;
    if (hi[i] < 0) {
      // empty row: mirror the row above to keep partitions monotone
      continue;
    }
    total += static_cast<std::size_t>(hi[i] - lo[i] + 1);
    if (lo[i] < start) throw ShapeError("row starts before ambient origin");
    outer[i - 1] = hi[i] - start + 1;
    inner[i - 1] = lo[i] - start;
  }
  if (total != boxes.size()) throw ShapeError("duplicate boxes");
  // Empty rows are pinned from the row above so the partitions stay
  // monotone (strictly, for shifted shapes).
  for (int i = nrows - 1; i >= 1; --i) {
    if (hi[i] >= 0) continue;
    const int above = outer[i];
    const int width = (kind == ShapeKind::shifted) ? above + 1 : above;
    outer[i - 1] = inner[i - 1] = width;
  }
  Shape s(kind, outer, inner);
  if (s.box_count() != boxes.size())
    throw ShapeError("box set is not a skew diagram");
  for (const Box& b : boxes)
    if (!s.contains(b)) throw ShapeError("box set is not a skew diagram");
  return s;
}

int ShapePoset::box_index(Box b) const {
  const auto& bs = shape.boxes();
  auto it = std::lower_bound(bs.begin(), bs.end(), b);
  if (it == bs.end() || *it != b) throw ShapeError("box not in shape");
  return static_cast<int>(it - bs.begin());
}

Box ShapePoset::box_at(int i) const { return shape.boxes().at(i); }

Bitset ShapePoset::box_set(const std::vector<Box>& bs) const {
  Bitset out(poset.size());
  for (const Box& b : bs) out.set(box_index(b));
  return out;
}

ShapePoset make_shape_poset(const Shape& s) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> covers;
  const auto& bs = s.boxes();
  std::map<Box, int> idx;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    names.push_back(std::to_string(bs[i].row) + "," + std::to_string(bs[i].col));
    idx[bs[i]] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < bs.size(); ++i) {
    for (Box up : {Box{bs[i].row, bs[i].col + 1}, Box{bs[i].row + 1, bs[i].col}}) {
      auto it = idx.find(up);
      if (it != idx.end()) covers.emplace_back(static_cast<int>(i), it->second);
    }
  }
  ShapePoset sp{s, Poset(std::move(names), std::move(covers))};
  if (sp.poset.graded()) {
    // prefer the ambient coordinate rank (they agree on graded shapes)
    std::vector<int> r(bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i)
      r[i] = s.rank(bs[i]);
    bool unit = true;
    for (auto [a, b] : sp.poset.covers())
      if (r[b] != r[a] + 1) unit = false;
    int lo = bs.empty() ? 1 : r[0];
    for (int v : r) lo = std::min(lo, v);
    if (unit && lo == 1) sp.poset.set_rank(std::move(r));
  }
  return sp;
}

ShapePoset rectangle(int a, int b) {
  if (a < 1 || b < a)
    throw ShapeError("rectangle requires 1 <= a <= b");
  return make_shape_poset(Shape(ShapeKind::ordinary, std::vector<int>(a, b)));
}

ShapePoset trapezoid(int a, int b) {
  if (a < 1 || b < a)
    throw ShapeError("trapezoid requires 1 <= a <= b");
  std::vector<int> rows;
  for (int i = 1; i <= a; ++i) rows.push_back(a + b + 1 - 2 * i);
  return make_shape_poset(Shape(ShapeKind::shifted, rows));
}

ShapePoset shape_from_partitions(ShapeKind kind, std::vector<int> outer,
                                 std::vector<int> inner) {
  return make_shape_poset(Shape(kind, std::move(outer), std::move(inner)));
}

namespace {

Poset from_segments(
    const std::vector<std::vector<std::string>>& ascending_segments) {
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::string> elems;
  for (const auto& seg : ascending_segments)
    for (std::size_t k = 0; k + 1 < seg.size(); ++k)
      covers.emplace_back(seg[k], seg[k + 1]);
  std::vector<std::pair<std::string, std::string>> uniq;
  for (auto& c : covers)
    if (std::find(uniq.begin(), uniq.end(), c) == uniq.end()) uniq.push_back(c);
  for (auto& c : uniq) {
    for (const std::string* s : {&c.first, &c.second})
      if (std::find(elems.begin(), elems.end(), *s) == elems.end())
        elems.push_back(*s);
  }
  std::sort(elems.begin(), elems.end());
  return build_poset(elems, uniq);
}

}  // namespace

// Hasse diagrams of the exceptional doppelganger pair, transcribed as
// ascending cover chains on grid-positioned nodes ("x.y", y is the height).
Poset exceptional_og612() {
  return from_segments({
      {"3.5", "4.6", "5.7"},
      {"3.7", "4.8", "5.9"},
      {"2.8", "3.9", "4.10", "5.11"},
      {"1.9", "2.10", "3.11", "4.12"},
      {"5.11", "4.12", "3.13"},
      {"5.9", "4.10", "3.11"},
      {"5.7", "4.8", "3.9", "2.10"},
      {"4.6", "3.7", "2.8", "1.9"},
  });
}

Poset exceptional_h3() {
  return from_segments({
      {"3.9", "4.10", "5.11", "6.12"},
      {"1.9", "2.10", "3.11", "4.12", "5.13"},
      {"3.13", "4.14"},
      {"6.12", "5.13", "4.14", "3.15", "2.16", "1.17"},
      {"5.11", "4.12", "3.13"},
      {"5.9", "4.10", "3.11"},
      {"3.9", "2.10"},
  });
}

Poset double_tailed_diamond(int n) {
  if (n < 2) throw PosetError("q(n) requires n >= 2");
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int k = 1; k < n; ++k) elems.push_back("c" + std::to_string(k));
  elems.push_back("x");
  elems.push_back("y");
  for (int k = 1; k < n; ++k) elems.push_back("d" + std::to_string(k));
  for (int k = 1; k + 1 < n; ++k)
    covers.emplace_back("c" + std::to_string(k), "c" + std::to_string(k + 1));
  covers.emplace_back("c" + std::to_string(n - 1), "x");
  covers.emplace_back("c" + std::to_string(n - 1), "y");
  covers.emplace_back("x", "d1");
  covers.emplace_back("y", "d1");
  for (int k = 1; k + 1 < n; ++k)
    covers.emplace_back("d" + std::to_string(k), "d" + std::to_string(k + 1));
  return build_poset(elems, covers);
}

Poset near_chain_i2(int m) {
  if (m < 3) throw PosetError("i2(m) requires m >= 3");
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int k = 1; k < m; ++k) elems.push_back("e" + std::to_string(k));
  elems.push_back("f");
  for (int k = 1; k + 1 < m; ++k)
    covers.emplace_back("e" + std::to_string(k), "e" + std::to_string(k + 1));
  covers.emplace_back("f", "e2");
  return build_poset(elems, covers);
}

Poset exceptional_poset(const std::string& name) {
  if (name == "og612") return exceptional_og612();
  if (name == "h3") return exceptional_h3();
  if (name.rfind("q:", 0) == 0)
    return double_tailed_diamond(std::stoi(name.substr(2)));
  if (name.rfind("i2:", 0) == 0)
    return near_chain_i2(std::stoi(name.substr(3)));
  throw PosetError("unknown exceptional poset: " + name);
}

EmbeddedShape embed_ordinary_as_shifted(const ShapePoset& ordinary) {
  if (ordinary.shape.kind() != ShapeKind::ordinary)
    throw ShapeError("embed: input must be ordinary");
  const int n = ordinary.shape.rows();
  std::vector<int> outer, inner;
  for (int i = 1; i <= n; ++i) {
    const int shift = n - i;
    outer.push_back(ordinary.shape.outer()[i - 1] + shift);
    const int inn = (i <= static_cast<int>(ordinary.shape.inner().size()))
                        ? ordinary.shape.inner()[i - 1]
                        : 0;
    inner.push_back(inn + shift);
  }
  EmbeddedShape out{make_shape_poset(Shape(ShapeKind::shifted, outer, inner)),
                    {}};
  for (const Box& b : ordinary.shape.boxes())
    out.image_of.push_back(Box{b.row, b.col + n - 1});
  return out;
}

std::vector<Shape> straight_shapes(ShapeKind kind, int max_boxes) {
  std::vector<Shape> out;
  std::vector<int> parts;
  // partitions in weakly (strictly for shifted) decreasing order
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (!parts.empty()) {
      std::vector<int> p(parts);
      out.emplace_back(kind, p);
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
      parts.push_back(next);
      rec(remaining - next,
          kind == ShapeKind::shifted ? next - 1 : next);
      parts.pop_back();
    }
  };
  rec(max_boxes, max_boxes);
  std::sort(out.begin(), out.end(), [](const Shape& a, const Shape& b) {
    if (a.box_count() != b.box_count()) return a.box_count() < b.box_count();
    return a.outer() < b.outer();
  });
  return out;
}

}  // namespace rowlab
