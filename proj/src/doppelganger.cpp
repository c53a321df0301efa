#include "rowlab/doppelganger.hpp"

#include <algorithm>
#include <sstream>

#include "rowlab/stats.hpp"

namespace rowlab {

namespace {

struct RectInfo {
  int a = 0, b = 0;
};

RectInfo rect_info(const IncreasingTableau& t) {
  const Shape sh = t.shape();
  if (t.kind() != ShapeKind::ordinary || !sh.inner().empty())
    throw TableauError("phi: input must be a straight ordinary tableau");
  RectInfo info;
  info.a = sh.rows();
  info.b = info.a > 0 ? sh.outer()[0] : 0;
  for (int part : sh.outer())
    if (part != info.b)
      throw TableauError("phi: input shape must be rectangular");
  return info;
}

IncreasingTableau embed_tableau(const IncreasingTableau& t, int nrows) {
  Filling f;
  for (const auto& [b, v] : t.entries()) f[{b.row, b.col + nrows - 1}] = v;
  return IncreasingTableau(ShapeKind::shifted, std::move(f), t.ell());
}

IncreasingTableau minimal_staircase(int a) {
  Filling f;
  for (int i = 1; i < a; ++i)
    for (int j = i; j < a; ++j) f[{i, j}] = i + j - 1;
  return IncreasingTableau(ShapeKind::shifted, std::move(f),
                           std::max(0, 2 * a - 3));
}

IncreasingTableau run_schedule(const IncreasingTableau& start,
                               const IncreasingTableau& schedule,
                               SlideTrace* trace) {
  IncreasingTableau cur = start;
  int top = 0;
  for (const auto& [b, v] : schedule.entries()) top = std::max(top, v);
  for (int k = top; k >= 1; --k) {
    std::vector<Box> c;
    for (const auto& [b, v] : schedule.entries())
      if (v == k) c.push_back(b);
    if (c.empty()) continue;
    cur = kjdt_forward(cur, c);
    if (trace) trace->steps.emplace_back(c, cur);
  }
  return cur;
}

std::string ideal_string(const ShapePoset& sp, const Bitset& ideal) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t i = 0; i < sp.poset.size(); ++i)
    if (ideal.test(i)) {
      if (!first) os << " ";
      os << sp.poset.elements()[i];
      first = false;
    }
  os << "}";
  return os.str();
}

std::string pp_string(const ShapePoset& sp, const PPartition& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (i) os << " ";
    os << sp.poset.elements()[i] << "=" << f.values[i];
  }
  return os.str();
}

}  // namespace

IncreasingTableau phi(const IncreasingTableau& t, SlideTrace* trace) {
  const RectInfo info = rect_info(t);
  const IncreasingTableau start = embed_tableau(t, info.a);
  const IncreasingTableau out =
      run_schedule(start, minimal_staircase(info.a), trace);
  const Shape expected = trapezoid(info.a, info.b).shape;
  if (out.shape() != expected)
    throw TableauError("phi: rectification did not reach the trapezoid");
  return out;
}

IncreasingTableau phi_with_target(const IncreasingTableau& t,
                                  const IncreasingTableau& target) {
  const RectInfo info = rect_info(t);
  const Shape want = minimal_staircase(info.a).shape();
  if (target.kind() != ShapeKind::shifted || target.shape() != want)
    throw TableauError("phi target must be a straight staircase tableau");
  const IncreasingTableau start = embed_tableau(t, info.a);
  const IncreasingTableau out = run_schedule(start, target, nullptr);
  const Shape expected = trapezoid(info.a, info.b).shape;
  if (out.shape() != expected)
    throw TableauError("phi target schedule did not reach the trapezoid");
  return out;
}

Bitset phi_on_ideals(const ShapePoset& rect, const ShapePoset& trap,
                     const Bitset& ideal) {
  const PPartition f = ppartition_from_ideal(rect, ideal);
  const IncreasingTableau img = phi(rank_shift_to_tableau(rect, f));
  const PPartition g = rank_shift_to_ppartition(trap, img, 1);
  return ideal_from_ppartition(trap, g);
}

PPartition phi_on_ppartition(const ShapePoset& rect, const ShapePoset& trap,
                             const PPartition& f) {
  const IncreasingTableau img = phi(rank_shift_to_tableau(rect, f));
  return rank_shift_to_ppartition(trap, img, f.height);
}

CommuteReport commute_audit(PairKind pair, int a, int b, int height,
                            AuditAction action, std::size_t max_witnesses) {
  CommuteReport rep;
  if (pair == PairKind::q_i2 || pair == PairKind::og612_h3) {
    const Poset left = (pair == PairKind::q_i2) ? double_tailed_diamond(a)
                                                : exceptional_og612();
    const Poset right =
        (pair == PairKind::q_i2) ? near_chain_i2(2 * a) : exceptional_h3();
    rep.orbit_sizes_left = orbit_decomposition(left).sorted_sizes();
    rep.orbit_sizes_right = orbit_decomposition(right).sorted_sizes();
    rep.commutes = rep.orbit_sizes_left == rep.orbit_sizes_right;
    rep.checked = rep.orbit_sizes_left.size();
    rep.summary = rep.commutes ? "orbit multisets agree"
                               : "orbit multisets differ";
    return rep;
  }
  const ShapePoset rect = rectangle(a, b);
  const ShapePoset trap = trapezoid(a, b);
  if (action == AuditAction::rowmotion) {
    if (height != 1)
      throw TableauError("rowmotion audit supports height 1 only");
    for (const Bitset& ideal : enumerate_ideals(rect.poset)) {
      const Bitset lhs = phi_on_ideals(rect, trap, rowmotion(rect.poset, ideal));
      const Bitset rhs = rowmotion(trap.poset, phi_on_ideals(rect, trap, ideal));
      ++rep.checked;
      if (lhs != rhs && rep.violations.size() < max_witnesses)
        rep.violations.push_back({ideal_string(rect, ideal),
                                  ideal_string(trap, lhs),
                                  ideal_string(trap, rhs)});
      if (lhs != rhs && rep.violations.size() >= max_witnesses) break;
    }
    rep.commutes = rep.violations.empty();
    std::ostringstream os;
    os << "checked " << rep.checked << " ideals, " << rep.violations.size()
       << " violations";
    rep.summary = os.str();
    return rep;
  }
  if (height < 1) throw TableauError("height must be >= 1");
  for (const PPartition& f : enumerate_ppartitions(rect, height)) {
    const PPartition lhs =
        phi_on_ppartition(rect, trap, pl_rowmotion_ppartition(rect, f));
    const PPartition rhs =
        pl_rowmotion_ppartition(trap, phi_on_ppartition(rect, trap, f));
    ++rep.checked;
    if (lhs.values != rhs.values) {
      if (rep.violations.size() < max_witnesses)
        rep.violations.push_back(
            {pp_string(rect, f), pp_string(trap, lhs), pp_string(trap, rhs)});
      else
        break;
    }
  }
  rep.commutes = rep.violations.empty();
  std::ostringstream os;
  os << "checked " << rep.checked << " height-" << height << " points, "
     << (rep.commutes ? "no violation" : "violations found");
  rep.summary = os.str();
  return rep;
}

bool plausibly_unique_rectification_target(const IncreasingTableau& target,
                                           std::size_t max_states) {
  const Word w0 = reading_word(target);
  // candidate straight shifted tableaux of nearby size and alphabet
  std::vector<Word> candidates;
  std::vector<IncreasingTableau> cand_tabs;
  for (const Shape& sh :
       straight_shapes(ShapeKind::shifted,
                       static_cast<int>(target.box_count()) + 2)) {
    const ShapePoset sp = make_shape_poset(sh);
    for (const IncreasingTableau& t : enumerate_tableaux(sp, target.ell())) {
      if (t.entries() == target.entries()) continue;
      candidates.push_back(reading_word(t));
      cand_tabs.push_back(t);
    }
  }
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const EquivalenceResult r = equivalent_bounded(
        w0, candidates[k], /*weak=*/true, w0.size() + 3, max_states);
    if (r.verdict == Verdict::equivalent) return false;
  }
  return true;
}

}  // namespace rowlab
