#include "rowlab/lp.hpp"

#include <algorithm>
#include <sstream>

namespace rowlab {

namespace {

std::string antichain_label(const Poset& p, const Bitset& a) {
  std::ostringstream os;
  os << "T[";
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (a.test(i)) {
      if (!first) os << " ";
      os << p.elements()[i];
      first = false;
    }
  os << "]";
  return os.str();
}

}  // namespace

LinearProgram build_symmetry_polytope(const Poset& p, SymmetryMode mode,
                                      std::size_t cap) {
  LinearProgram lp;
  lp.ideals = enumerate_ideals(p, cap);
  if (mode == SymmetryMode::elements) {
    for (std::size_t e = 0; e < p.size(); ++e) {
      Bitset a(p.size());
      a.set(e);
      lp.constraint_antichains.push_back(a);
    }
  } else {
    // antichains are in bijection with ideals via maximal elements
    for (const Bitset& ideal : lp.ideals)
      lp.constraint_antichains.push_back(p.maximal_of(ideal));
  }
  for (const Bitset& a : lp.constraint_antichains) {
    std::vector<Rational> row(lp.ideals.size(), Rational(0));
    for (std::size_t k = 0; k < lp.ideals.size(); ++k) {
      const Toggleability t = toggleability(p, a, lp.ideals[k]);
      if (t.net() != 0) row[k] = t.net();
    }
    lp.rows.push_back(std::move(row));
    lp.rhs.emplace_back(0);
    lp.row_labels.push_back(antichain_label(p, a));
  }
  lp.rows.emplace_back(lp.ideals.size(), Rational(1));
  lp.rhs.emplace_back(1);
  lp.row_labels.emplace_back("normalization");
  lp.objective.assign(lp.ideals.size(), Rational(0));
  for (std::size_t k = 0; k < lp.ideals.size(); ++k)
    lp.objective[k] = down_degree(p, lp.ideals[k]);
  return lp;
}

namespace {

// Dense exact simplex, phase 1 + phase 2, Bland's anti-cycling rule.
class Simplex {
 public:
  Simplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
      : a_(std::move(a)), b_(std::move(b)), m_(a_.size()),
        n_(m_ ? a_[0].size() : 0) {
    for (std::size_t r = 0; r < m_; ++r)
      if (b_[r] < 0) {
        for (auto& v : a_[r]) v = -v;
        b_[r] = -b_[r];
      }
  }

  // minimizes c.x over Ax=b, x>=0; returns false if infeasible
  bool solve(const std::vector<Rational>& c, Rational& value,
             std::vector<Rational>& x) {
    // phase 1: artificial basis
    tab_.assign(m_, std::vector<Rational>(n_ + m_ + 1, Rational(0)));
    basis_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t j = 0; j < n_; ++j) tab_[r][j] = a_[r][j];
      tab_[r][n_ + r] = 1;
      tab_[r].back() = b_[r];
      basis_[r] = n_ + r;
    }
    width_ = n_ + m_;
    {
      std::vector<Rational> phase1(width_, Rational(0));
      for (std::size_t j = n_; j < width_; ++j) phase1[j] = 1;
      run(phase1);
      Rational art = 0;
      for (std::size_t r = 0; r < m_; ++r)
        if (basis_[r] >= n_) art += tab_[r].back();
      if (art != 0) return false;
      // pivot artificials out where possible; redundant rows stay harmless
      for (std::size_t r = 0; r < m_; ++r) {
        if (basis_[r] < n_) continue;
        for (std::size_t j = 0; j < n_; ++j)
          if (tab_[r][j] != 0) {
            pivot(r, j);
            break;
          }
      }
    }
    // phase 2: forbid artificials from re-entering
    std::vector<Rational> cost(width_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) cost[j] = c[j];
    blocked_artificials_ = true;
    run(cost);
    x.assign(n_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] < n_) x[basis_[r]] = tab_[r].back();
    value = 0;
    for (std::size_t j = 0; j < n_; ++j)
      if (x[j] != 0) value += c[j] * x[j];
    return true;
  }

 private:
  void run(const std::vector<Rational>& cost) {
    while (true) {
      // reduced costs: cost_j - cost_B . column_j
      std::vector<Rational> y(m_);
      for (std::size_t r = 0; r < m_; ++r) y[r] = cost[basis_[r]];
      std::size_t enter = width_;
      for (std::size_t j = 0; j < width_; ++j) {
        if (blocked_artificials_ && j >= n_) break;
        if (is_basic(j)) continue;
        Rational red = cost[j];
        for (std::size_t r = 0; r < m_; ++r)
          if (tab_[r][j] != 0) red -= y[r] * tab_[r][j];
        if (red < 0) {
          enter = j;  // Bland: smallest index
          break;
        }
      }
      if (enter == width_) return;
      std::size_t leave = m_;
      Rational best = 0;
      for (std::size_t r = 0; r < m_; ++r) {
        if (tab_[r][enter] <= 0) continue;
        const Rational ratio = tab_[r].back() / tab_[r][enter];
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave]))
          leave = r, best = ratio;
      }
      if (leave == m_) throw LpError("unbounded program");
      pivot(leave, enter);
    }
  }

  bool is_basic(std::size_t j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

  void pivot(std::size_t r, std::size_t col) {
    const Rational piv = tab_[r][col];
    for (auto& v : tab_[r]) v /= piv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || tab_[i][col] == 0) continue;
      const Rational factor = tab_[i][col];
      for (std::size_t j = 0; j <= width_; ++j)
        if (tab_[r][j] != 0) tab_[i][j] -= factor * tab_[r][j];
    }
    basis_[r] = col;
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::size_t m_, n_, width_ = 0;
  std::vector<std::vector<Rational>> tab_;
  std::vector<std::size_t> basis_;
  bool blocked_artificials_ = false;
};

}  // namespace

OptimizeResult optimize(const LinearProgram& lp, OptimizeSense sense) {
  std::vector<Rational> c = lp.objective;
  if (sense == OptimizeSense::maximize)
    for (auto& v : c) v = -v;
  Simplex solver(lp.rows, lp.rhs);
  OptimizeResult out;
  std::vector<Rational> x;
  if (!solver.solve(c, out.optimum, x))
    throw LpError("infeasible program");
  if (sense == OptimizeSense::maximize) out.optimum = -out.optimum;
  out.witness.weights = std::move(x);
  if (!witness_feasible(lp, out.witness))
    throw LpError("solver returned an infeasible witness");
  return out;
}

bool witness_feasible(const LinearProgram& lp, const Distribution& w) {
  if (w.weights.size() != lp.ideals.size()) return false;
  for (const Rational& v : w.weights)
    if (v < 0) return false;
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    Rational dot = 0;
    for (std::size_t j = 0; j < w.weights.size(); ++j)
      if (w.weights[j] != 0 && lp.rows[r][j] != 0)
        dot += lp.rows[r][j] * w.weights[j];
    if (dot != lp.rhs[r]) return false;
  }
  return true;
}

DdegRange ddeg_range(int a, int b, SymmetryMode mode, std::size_t cap) {
  const ShapePoset trap = trapezoid(a, b);
  DdegRange out;
  out.target = Rational(a) * b / Rational(a + b);
  LinearProgram lp;
  try {
    lp = build_symmetry_polytope(trap.poset, mode, cap);
  } catch (const CapExceeded&) {
    out.verdict = "size-skipped";
    return out;
  }
  OptimizeResult lo = optimize(lp, OptimizeSense::minimize);
  OptimizeResult hi = optimize(lp, OptimizeSense::maximize);
  out.min = lo.optimum;
  out.max = hi.optimum;
  out.min_witness = std::move(lo.witness);
  out.max_witness = std::move(hi.witness);
  out.verdict = (out.min == out.target && out.max == out.target)
                    ? "proven-at-size"
                    : "counterexample";
  return out;
}

}  // namespace rowlab
