#include "rowlab/stats.hpp"

#include <algorithm>
#include <unordered_map>

namespace rowlab {

int down_degree(const Poset& p, const Bitset& ideal) {
  return static_cast<int>(p.maximal_of(ideal).count());
}

std::vector<int> stanley_thomas(const ShapePoset& rect, const Bitset& ideal) {
  const Shape& sh = rect.shape;
  if (sh.kind() != ShapeKind::ordinary || !sh.inner().empty())
    throw StatsError("corner word needs a rectangle poset");
  const int a = sh.rows();
  const int b = a > 0 ? sh.outer()[0] : 0;
  for (int part : sh.outer())
    if (part != b) throw StatsError("corner word needs a rectangle poset");
  const int corner = rect.box_index({1, b});
  std::vector<int> w(static_cast<std::size_t>(a + b), 0);
  Bitset cur = ideal;
  for (int k = 1; k <= a + b; ++k) {
    cur = rowmotion_inverse(rect.poset, cur);
    w[static_cast<std::size_t>(k - 1)] = cur.test(corner) ? 0 : 1;
  }
  return w;
}

Toggleability toggleability(const Poset& p, const Bitset& antichain,
                            const Bitset& ideal) {
  if (!p.is_antichain(antichain)) throw StatsError("not an antichain");
  Toggleability t;
  if (!antichain.intersects(ideal) && p.is_ideal(ideal | antichain)) t.plus = 1;
  if (antichain.is_subset_of(ideal) && p.is_ideal(ideal.minus(antichain)))
    t.minus = 1;
  return t;
}

RookCoefficients rook_coefficients(const ShapePoset& trap, int a, int b,
                                   Box square) {
  if (!trap.shape.contains(square))
    throw StatsError("rook square outside the trapezoid");
  const int i = square.row, j = square.col;
  RookCoefficients out;
  const auto& boxes = trap.shape.boxes();
  out.minus.assign(boxes.size(), 0);
  out.plus.assign(boxes.size(), 0);
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const int ip = boxes[k].row, jp = boxes[k].col;
    if (ip >= i && jp >= j)
      out.minus[k] = 1;
    else if (ip < i && jp < j && jp > ip)
      out.minus[k] = -1;
    if (ip <= i && jp <= j)
      out.plus[k] = 1;
    else if (ip > i && jp > j && jp > ip)
      out.plus[k] = -1;
  }
  // adjacent maximal boxes (i', a+b-i') and (i'+1, a+b-i'-1)
  out.pair_coeff.assign(static_cast<std::size_t>(std::max(0, a - 1)), 0);
  for (int ip = 1; ip < a; ++ip)
    if (ip >= i && (a + b - (ip + 1)) >= j)
      out.pair_coeff[static_cast<std::size_t>(ip - 1)] = -1;
  return out;
}

Rational rook_statistic(const ShapePoset& trap, int a, int b, Box square,
                        const Bitset& ideal) {
  const RookCoefficients co = rook_coefficients(trap, a, b, square);
  Rational total = 0;
  const auto& boxes = trap.shape.boxes();
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    if (co.minus[k] == 0 && co.plus[k] == 0) continue;
    Bitset single(trap.poset.size());
    single.set(k);
    const Toggleability t = toggleability(trap.poset, single, ideal);
    total += Rational(co.minus[k]) * t.minus + Rational(co.plus[k]) * t.plus;
  }
  for (int ip = 1; ip < a; ++ip) {
    if (co.pair_coeff[static_cast<std::size_t>(ip - 1)] == 0) continue;
    Bitset pair(trap.poset.size());
    pair.set(trap.box_index({ip, a + b - ip}));
    pair.set(trap.box_index({ip + 1, a + b - ip - 1}));
    const Toggleability t = toggleability(trap.poset, pair, ideal);
    total += Rational(co.pair_coeff[static_cast<std::size_t>(ip - 1)]) * t.minus;
  }
  return total;
}

Rational expectation(const std::vector<Bitset>& ideals, const Distribution& mu,
                     const IdealStatistic& f) {
  if (mu.weights.size() != ideals.size())
    throw StatsError("distribution size mismatch");
  Rational total = 0, mass = 0;
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    if (mu.weights[k] < 0) throw StatsError("negative weight");
    mass += mu.weights[k];
    if (mu.weights[k] != 0) total += mu.weights[k] * f(ideals[k]);
  }
  if (mass != 1) throw StatsError("distribution is not normalized");
  return total;
}

Distribution orbit_uniform(const Poset& p, const std::vector<Bitset>& ideals,
                           const Bitset& seed) {
  std::unordered_map<Bitset, std::size_t, BitsetHash> index;
  for (std::size_t k = 0; k < ideals.size(); ++k) index[ideals[k]] = k;
  Distribution mu;
  mu.weights.assign(ideals.size(), Rational(0));
  std::vector<std::size_t> orbit;
  Bitset cur = seed;
  do {
    auto it = index.find(cur);
    if (it == index.end()) throw StatsError("seed leaves the ideal list");
    orbit.push_back(it->second);
    cur = rowmotion(p, cur);
  } while (cur != seed);
  const Rational w = Rational(1) / Rational(static_cast<unsigned>(orbit.size()));
  for (std::size_t k : orbit) mu.weights[k] = w;
  return mu;
}

Rational expected_toggle(const Poset& p, const std::vector<Bitset>& ideals,
                         const Distribution& mu, const Bitset& antichain,
                         int sign) {
  Rational total = 0;
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    if (mu.weights[k] == 0) continue;
    const Toggleability t = toggleability(p, antichain, ideals[k]);
    const int v = sign > 0 ? t.plus : (sign < 0 ? t.minus : t.net());
    if (v != 0) total += mu.weights[k] * v;
  }
  return total;
}

HomomesyReport homomesy_audit(const Poset& p, const IdealStatistic& f,
                              std::size_t cap) {
  const OrbitDecomposition dec = orbit_decomposition(p, {}, cap);
  HomomesyReport rep;
  Rational global_sum = 0;
  for (std::size_t oid = 0; oid < dec.orbits.size(); ++oid) {
    HomomesyOrbitRow row;
    row.orbit_id = oid;
    row.size = dec.orbits[oid].size();
    row.stat_sum = 0;
    for (std::size_t idx : dec.orbits[oid]) row.stat_sum += f(dec.ideals[idx]);
    row.average = row.stat_sum / Rational(static_cast<unsigned>(row.size));
    global_sum += row.stat_sum;
    rep.orbits.push_back(row);
  }
  rep.global_average =
      global_sum / Rational(static_cast<unsigned>(dec.ideals.size()));
  rep.homomesic = true;
  for (const auto& row : rep.orbits)
    if (row.average != rep.global_average) {
      rep.homomesic = false;
      rep.witness_orbits.push_back(row.orbit_id);
    }
  return rep;
}

bool in_order_polytope(const Poset& p, const PolytopePoint& f) {
  if (f.values.size() != p.size()) return false;
  for (const Rational& v : f.values)
    if (v < 0 || v > 1) return false;
  for (auto [a, b] : p.covers())
    if (f.values[a] > f.values[b]) return false;
  return true;
}

PolytopePoint pl_toggle(const Poset& p, const PolytopePoint& f, int e) {
  if (!in_order_polytope(p, f))
    throw StatsError("point outside the order polytope");
  if (e < 0 || e >= static_cast<int>(p.size()))
    throw StatsError("unknown element");
  PolytopePoint g = f;
  Rational up = 1, dn = 0;
  for (int q : p.upper_covers(e)) up = std::min(up, f.values[q]);
  for (int q : p.lower_covers(e)) dn = std::max(dn, f.values[q]);
  g.values[e] = up + dn - f.values[e];
  return g;
}

PolytopePoint pl_rowmotion(const Poset& p, const PolytopePoint& f,
                           const std::vector<int>& extension) {
  PolytopePoint cur = f;
  for (auto it = extension.rbegin(); it != extension.rend(); ++it)
    cur = pl_toggle(p, cur, *it);
  return cur;
}

PolytopePoint pl_rowmotion(const Poset& p, const PolytopePoint& f) {
  return pl_rowmotion(p, f, linear_extension(p));
}

PPartition pl_rowmotion_ppartition(const ShapePoset& sp, const PPartition& f) {
  PolytopePoint pt;
  pt.values.reserve(f.values.size());
  for (int v : f.values) pt.values.emplace_back(Rational(v) / f.height);
  const PolytopePoint out = pl_rowmotion(sp.poset, pt);
  PPartition g;
  g.height = f.height;
  g.values.reserve(out.values.size());
  for (const Rational& v : out.values) {
    const Rational scaled = v * f.height;
    const auto num = boost::multiprecision::numerator(scaled);
    const auto den = boost::multiprecision::denominator(scaled);
    if (den != 1) throw StatsError("lattice point left the lattice");
    g.values.push_back(static_cast<int>(num));
  }
  return g;
}

}  // namespace rowlab
