#include "rowlab/tableau.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace rowlab {

namespace {

bool box_lt(Box a, Box b) { return a != b && a.row <= b.row && a.col <= b.col; }

void check_increasing(ShapeKind kind, const Filling& f) {
  for (const auto& [b, v] : f) {
    for (Box up : {Box{b.row, b.col + 1}, Box{b.row + 1, b.col}}) {
      auto it = f.find(up);
      if (it == f.end()) continue;
      if (v != kBullet && it->second != kBullet && v >= it->second)
        throw TableauError("filling is not strictly increasing");
    }
  }
  if (kind == ShapeKind::shifted)
    for (const auto& [b, v] : f)
      if (b.col < b.row) throw TableauError("box below shifted diagonal");
}

std::vector<Box> domain(const Filling& f) {
  std::vector<Box> out;
  out.reserve(f.size());
  for (const auto& [b, v] : f) out.push_back(b);
  return out;
}

}  // namespace

IncreasingTableau::IncreasingTableau(ShapeKind kind, Filling entries, int ell)
    : kind_(kind), entries_(std::move(entries)), ell_(ell) {
  for (const auto& [b, v] : entries_) {
    if (v <= 0) throw TableauError("entries must be positive");
    ell_ = std::max(ell_, v);
  }
  check_increasing(kind_, entries_);
  shape_ = shape_from_boxes(kind_, domain(entries_));
}

int IncreasingTableau::at(Box b) const {
  auto it = entries_.find(b);
  if (it == entries_.end()) throw TableauError("box not in tableau");
  return it->second;
}

std::vector<std::vector<int>> IncreasingTableau::rows_bottom_up() const {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= shape_.rows(); ++i) {
    auto [lo, hi] = shape_.row_span(i);
    std::vector<int> row;
    for (int c = lo; c <= hi; ++c) row.push_back(at({i, c}));
    out.push_back(std::move(row));
  }
  return out;
}

IncreasingTableau tableau_from_rows(ShapeKind kind,
                                    const std::vector<std::vector<int>>& rows,
                                    const std::vector<int>& offsets, int ell) {
  Filling f;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int base = (kind == ShapeKind::shifted) ? static_cast<int>(i) + 1 : 1;
    const int off = i < offsets.size() ? offsets[i] : 0;
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      f[{static_cast<int>(i) + 1, base + off + static_cast<int>(j)}] =
          rows[i][j];
  }
  return IncreasingTableau(kind, std::move(f), ell);
}

Filling swap_entries(const Filling& f, int a, int b) {
  Filling g = f;
  auto has_neighbor = [&](Box x, int val) {
    for (Box nb : {Box{x.row, x.col + 1}, Box{x.row + 1, x.col},
                   Box{x.row, x.col - 1}, Box{x.row - 1, x.col}}) {
      auto it = f.find(nb);
      if (it != f.end() && it->second == val) return true;
    }
    return false;
  };
  for (const auto& [x, v] : f) {
    if (v == b && has_neighbor(x, a))
      g[x] = a;
    else if (v == a && has_neighbor(x, b))
      g[x] = b;
  }
  return g;
}

namespace {

Filling strip_bullets(const Filling& f) {
  Filling out;
  for (const auto& [b, v] : f)
    if (v != kBullet) out[b] = v;
  return out;
}

std::vector<Box> inner_maximal_boxes(const IncreasingTableau& t) {
  // maximal boxes of the inner shape (boxes of mu with no mu-box above)
  const Shape sh = t.shape();
  std::set<Box> inner;
  for (int i = 1; i <= sh.rows(); ++i) {
    const int start = (sh.kind() == ShapeKind::shifted) ? i : 1;
    auto [lo, hi] = sh.row_span(i);
    (void)hi;
    for (int c = start; c < lo; ++c) inner.insert({i, c});
  }
  std::vector<Box> out;
  for (Box b : inner)
    if (!inner.count({b.row, b.col + 1}) && !inner.count({b.row + 1, b.col}))
      out.push_back(b);
  return out;
}

Filling slide_forward_raw(Filling f, const std::vector<Box>& c, int ell) {
  for (Box b : c) f[b] = kBullet;
  for (int v = 1; v <= ell; ++v) f = swap_entries(f, kBullet, v);
  return strip_bullets(f);
}

}  // namespace

std::vector<Box> inner_slide_boxes(const IncreasingTableau& t) {
  return inner_maximal_boxes(t);
}

std::vector<Box> outer_slide_boxes(const IncreasingTableau& t) {
  const Shape sh = t.shape();
  auto in_outer = [&](Box b) {
    if (b.row < 1 || b.row > sh.rows()) return false;
    const int start = (sh.kind() == ShapeKind::shifted) ? b.row : 1;
    return b.col >= start && b.col <= start + sh.outer()[b.row - 1] - 1;
  };
  std::vector<Box> out;
  for (int i = 1; i <= sh.rows() + 1; ++i) {
    const int start = (sh.kind() == ShapeKind::shifted) ? i : 1;
    const int end = (i <= sh.rows()) ? start + sh.outer()[i - 1] : start;
    for (int c = start; c <= end; ++c) {
      const Box b{i, c};
      if (in_outer(b)) continue;
      bool minimal = true;
      for (Box dn : {Box{b.row - 1, b.col}, Box{b.row, b.col - 1}}) {
        if (dn.row < 1 || dn.col < 1) continue;
        if (sh.kind() == ShapeKind::shifted && dn.col < dn.row) continue;
        if (!in_outer(dn)) minimal = false;
      }
      if (minimal) out.push_back(b);
    }
  }
  return out;
}

IncreasingTableau kjdt_forward(const IncreasingTableau& t,
                               const std::vector<Box>& c) {
  const auto maximal = inner_maximal_boxes(t);
  for (Box b : c) {
    if (std::find(maximal.begin(), maximal.end(), b) == maximal.end())
      throw TableauError("forward slide: box is not maximal in the inner shape");
  }
  return IncreasingTableau(t.kind(), slide_forward_raw(t.entries(), c, t.ell()),
                           t.ell());
}

IncreasingTableau kjdt_reverse(const IncreasingTableau& t,
                               const std::vector<Box>& c) {
  const Shape sh = t.shape();
  // membership in the outer diagram (the inner hole counts as inside)
  auto in_outer = [&](Box b) {
    if (b.row < 1 || b.row > sh.rows()) return false;
    const int start = (sh.kind() == ShapeKind::shifted) ? b.row : 1;
    return b.col >= start && b.col <= start + sh.outer()[b.row - 1] - 1;
  };
  for (Box b : c) {
    if (in_outer(b)) throw TableauError("reverse slide: box inside shape");
    if (b.row < 1 || b.col < (sh.kind() == ShapeKind::shifted ? b.row : 1))
      throw TableauError("reverse slide: box outside ambient");
    // minimal above the outer shape: every ambient lower cover lies inside
    for (Box dn : {Box{b.row - 1, b.col}, Box{b.row, b.col - 1}}) {
      if (dn.row < 1 || dn.col < 1) continue;
      if (sh.kind() == ShapeKind::shifted && dn.col < dn.row) continue;
      if (!in_outer(dn))
        throw TableauError("reverse slide: box is not minimal above the shape");
    }
  }
  Filling f = t.entries();
  for (Box b : c) f[b] = kBullet;
  for (int v = t.ell(); v >= 1; --v) f = swap_entries(f, v, kBullet);
  return IncreasingTableau(t.kind(), strip_bullets(f), t.ell());
}

IncreasingTableau k_promotion(const IncreasingTableau& t) {
  const int ell = t.ell();
  std::vector<Box> ones;
  Filling dec;
  for (const auto& [b, v] : t.entries()) {
    if (v == 1)
      ones.push_back(b);
    else
      dec[b] = v - 1;
  }
  if (ones.empty())
    return IncreasingTableau(t.kind(), std::move(dec), ell);
  // the vacated value-1 boxes are maximal in the grown inner shape
  Filling rect = slide_forward_raw(std::move(dec), ones, ell);
  for (const auto& [b, v] : t.entries())
    if (!rect.count(b)) rect[b] = ell;
  IncreasingTableau res(t.kind(), std::move(rect), ell);
  if (res.shape() != t.shape())
    throw TableauError("promotion changed the shape");
  return res;
}

IncreasingTableau kbk(const IncreasingTableau& t, int i) {
  if (i < 1 || i >= t.ell()) throw TableauError("kbk index out of range");
  const Filling& f = t.entries();
  Filling g = f;
  for (const auto& [x, v] : f) {
    if (v == i + 1) {
      bool blocked = false;
      for (const auto& [y, w] : f)
        if (w == i && box_lt(y, x)) {
          blocked = true;
          break;
        }
      if (!blocked) g[x] = i;
    } else if (v == i) {
      bool blocked = false;
      for (const auto& [y, w] : f)
        if (w == i + 1 && box_lt(x, y)) {
          blocked = true;
          break;
        }
      if (!blocked) g[x] = i + 1;
    }
  }
  return IncreasingTableau(t.kind(), std::move(g), t.ell());
}

IncreasingTableau k_promotion_via_kbk(const IncreasingTableau& t) {
  IncreasingTableau cur = t;
  for (int i = 1; i < t.ell(); ++i) cur = kbk(cur, i);
  return cur;
}

std::vector<int> reading_word(const IncreasingTableau& t) {
  std::vector<int> out;
  const Shape sh = t.shape();
  for (int i = sh.rows(); i >= 1; --i) {
    auto [lo, hi] = sh.row_span(i);
    for (int c = lo; c <= hi; ++c) out.push_back(t.at({i, c}));
  }
  return out;
}

IncreasingTableau restrict_tableau(const IncreasingTableau& t, int lo,
                                   int hi) {
  if (lo > hi) throw TableauError("restrict: lo > hi");
  Filling f;
  for (const auto& [b, v] : t.entries())
    if (v >= lo && v <= hi) f[b] = v;
  return IncreasingTableau(t.kind(), std::move(f), t.ell());
}

IncreasingTableau double_tableau(const IncreasingTableau& t) {
  if (t.kind() != ShapeKind::shifted)
    throw TableauError("double: input must be shifted");
  const Shape sh = t.shape();
  if (!sh.inner().empty()) throw TableauError("double: input must be straight");
  Filling f;
  for (const auto& [b, v] : t.entries()) {
    f[b] = v;
    f[{b.col, b.row}] = v;
  }
  return IncreasingTableau(ShapeKind::ordinary, std::move(f), t.ell());
}

std::vector<int> doubled_reading_word(const IncreasingTableau& t) {
  if (t.kind() != ShapeKind::shifted)
    throw TableauError("doubled word: input must be shifted");
  Filling f;
  for (const auto& [b, v] : t.entries()) {
    f[b] = v;
    f[{b.col, b.row}] = v;
  }
  std::vector<int> out;
  int top = 0;
  for (const auto& [b, v] : f) top = std::max(top, b.row);
  for (int i = top; i >= 1; --i)
    for (const auto& [b, v] : f)
      if (b.row == i) out.push_back(v);
  return out;
}

PPartition ppartition_from_ideal(const ShapePoset& sp, const Bitset& ideal) {
  if (!sp.poset.is_ideal(ideal)) throw TableauError("not an order ideal");
  PPartition f;
  f.height = 1;
  f.values.assign(sp.poset.size(), 0);
  for (std::size_t i = 0; i < sp.poset.size(); ++i)
    f.values[i] = ideal.test(i) ? 0 : 1;
  return f;
}

Bitset ideal_from_ppartition(const ShapePoset& sp, const PPartition& f) {
  if (f.height != 1) throw TableauError("ideal view needs height 1");
  Bitset out(sp.poset.size());
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (f.values[i] == 0) out.set(i);
  return out;
}

bool is_order_preserving(const ShapePoset& sp, const PPartition& f) {
  for (auto [a, b] : sp.poset.covers())
    if (f.values[a] > f.values[b]) return false;
  for (int v : f.values)
    if (v < 0 || v > f.height) return false;
  return true;
}

std::vector<PPartition> enumerate_ppartitions(const ShapePoset& sp,
                                              int height) {
  const auto ext = linear_extension(sp.poset);
  std::vector<PPartition> out;
  PPartition cur;
  cur.height = height;
  cur.values.assign(sp.poset.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == ext.size()) {
      out.push_back(cur);
      return;
    }
    const int e = ext[k];
    int lo = 0;
    for (int d : sp.poset.lower_covers(e))
      lo = std::max(lo, cur.values[d]);
    for (int v = lo; v <= height; ++v) {
      cur.values[e] = v;
      rec(k + 1);
    }
    cur.values[e] = 0;
  };
  rec(0);
  return out;
}

IncreasingTableau rank_shift_to_tableau(const ShapePoset& sp,
                                        const PPartition& f) {
  if (!sp.poset.graded()) throw TableauError("rank shift needs a graded shape");
  if (!is_order_preserving(sp, f))
    throw TableauError("values are not order-preserving");
  const auto& rk = *sp.poset.rank();
  Filling out;
  for (std::size_t i = 0; i < sp.poset.size(); ++i)
    out[sp.box_at(static_cast<int>(i))] = f.values[i] + rk[i];
  return IncreasingTableau(sp.shape.kind(), std::move(out),
                           f.height + sp.poset.max_rank());
}

PPartition rank_shift_to_ppartition(const ShapePoset& sp,
                                    const IncreasingTableau& t, int height) {
  if (!sp.poset.graded()) throw TableauError("rank shift needs a graded shape");
  if (t.shape() != sp.shape) throw TableauError("tableau shape mismatch");
  const auto& rk = *sp.poset.rank();
  PPartition f;
  f.height = height;
  f.values.assign(sp.poset.size(), 0);
  for (std::size_t i = 0; i < sp.poset.size(); ++i) {
    const int v = t.at(sp.box_at(static_cast<int>(i))) - rk[i];
    if (v < 0 || v > height)
      throw TableauError("entry minus rank outside [0, height]");
    f.values[i] = v;
  }
  return f;
}

Bitset rank_toggle_product(const ShapePoset& sp, const Bitset& ideal, int i) {
  if (!sp.poset.graded())
    throw TableauError("rank toggle product needs a graded shape");
  const auto& rk = *sp.poset.rank();
  Bitset cur = ideal;
  for (std::size_t e = 0; e < sp.poset.size(); ++e)
    if (rk[e] == i) cur = toggle(sp.poset, cur, static_cast<int>(e));
  return cur;
}

std::vector<IncreasingTableau> enumerate_tableaux(const ShapePoset& sp,
                                                  int ell) {
  // DFS in canonical box order; lower covers are earlier boxes.
  const auto& boxes = sp.shape.boxes();
  std::vector<IncreasingTableau> out;
  Filling cur;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == boxes.size()) {
      out.emplace_back(sp.shape.kind(), cur, ell);
      return;
    }
    const Box b = boxes[k];
    int lo = 1;
    for (Box dn : {Box{b.row - 1, b.col}, Box{b.row, b.col - 1}}) {
      auto it = cur.find(dn);
      if (it != cur.end()) lo = std::max(lo, it->second + 1);
    }
    for (int v = lo; v <= ell; ++v) {
      cur[b] = v;
      rec(k + 1);
    }
    cur.erase(b);
  };
  rec(0);
  return out;
}

}  // namespace rowlab
