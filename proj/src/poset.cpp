#include "rowlab/poset.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

namespace rowlab {

Poset::Poset(std::vector<std::string> elements,
             std::vector<std::pair<int, int>> covers)
    : elements_(std::move(elements)), covers_(std::move(covers)) {
  const std::size_t n = elements_.size();
  up_.assign(n, {});
  down_.assign(n, {});
  for (auto [a, b] : covers_) {
    if (a < 0 || b < 0 || a >= static_cast<int>(n) || b >= static_cast<int>(n))
      throw PosetError("cover references undeclared element");
    if (a == b) throw PosetError("cycle detected: self-cover");
    up_[a].push_back(b);
    down_[b].push_back(a);
  }

  // Kahn topological order; also detects cycles.
  std::vector<int> indeg(n, 0), topo;
  for (auto [a, b] : covers_) indeg[b]++;
  std::queue<int> q;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) q.push(static_cast<int>(i));
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    topo.push_back(u);
    for (int v : up_[u])
      if (--indeg[v] == 0) q.push(v);
  }
  if (topo.size() != n) throw PosetError("cycle detected in cover relation");

  below_.assign(n, Bitset(n));
  above_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) below_[i].set(i);
  for (int u : topo)
    for (int v : up_[u]) below_[v] = below_[v] | below_[u];
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    above_[*it].set(*it);
    for (int v : up_[*it]) above_[*it] = above_[*it] | above_[v];
  }

  // Transitive reduction check: a cover must not be implied by two others.
  for (auto [a, b] : covers_) {
    for (int m : up_[a]) {
      if (m != b && below_[b].test(m))
        throw PosetError("non-reduced cover set: " + elements_[a] + " < " +
                         elements_[b] + " is implied");
    }
  }

  // Per-component rank propagation; kept only when the poset is graded.
  std::vector<int> r(n, 0), comp(n, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{static_cast<int>(s)};
    std::vector<int> seen;
    comp[s] = ncomp;
    r[s] = 0;
    bool ok = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      seen.push_back(u);
      for (int v : up_[u]) {
        if (comp[v] == -1) {
          comp[v] = ncomp;
          r[v] = r[u] + 1;
          stack.push_back(v);
        } else if (r[v] != r[u] + 1) {
          ok = false;
        }
      }
      for (int v : down_[u]) {
        if (comp[v] == -1) {
          comp[v] = ncomp;
          r[v] = r[u] - 1;
          stack.push_back(v);
        } else if (r[u] != r[v] + 1) {
          ok = false;
        }
      }
    }
    if (!ok) {
      rank_.reset();
      return;
    }
    int lo = r[seen.front()];
    for (int u : seen) lo = std::min(lo, r[u]);
    for (int u : seen) r[u] = r[u] - lo + 1;
    ++ncomp;
  }
  // Graded: every minimal element at rank 1, every maximal at the global max.
  int rmax = 1;
  for (std::size_t i = 0; i < n; ++i) rmax = std::max(rmax, r[i]);
  for (std::size_t i = 0; i < n; ++i) {
    if (down_[i].empty() && r[i] != 1) return;
    if (up_[i].empty() && r[i] != rmax) return;
  }
  if (n > 0) rank_ = std::move(r);
}

int Poset::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == name) return static_cast<int>(i);
  throw PosetError("unknown element: " + name);
}

int Poset::max_rank() const {
  if (!rank_) throw PosetError("poset is not graded");
  int m = 1;
  for (int v : *rank_) m = std::max(m, v);
  return m;
}

void Poset::set_rank(std::vector<int> rank) {
  if (rank.size() != size()) throw PosetError("rank size mismatch");
  for (auto [a, b] : covers_)
    if (rank[b] != rank[a] + 1) throw PosetError("rank violates cover law");
  rank_ = std::move(rank);
}

bool Poset::is_ideal(const Bitset& s) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (s.test(i))
      for (int d : down_[i])
        if (!s.test(d)) return false;
  return true;
}

bool Poset::is_antichain(const Bitset& s) const {
  auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (leq(static_cast<int>(m[i]), static_cast<int>(m[j])) ||
          leq(static_cast<int>(m[j]), static_cast<int>(m[i])))
        return false;
  return true;
}

Bitset Poset::full_set() const {
  Bitset b(size());
  for (std::size_t i = 0; i < size(); ++i) b.set(i);
  return b;
}

Bitset Poset::generated_ideal(const Bitset& gens) const {
  Bitset out(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (gens.test(i)) out = out | below_[i];
  return out;
}

Bitset Poset::minimal_of(const Bitset& s) const {
  Bitset out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (!s.test(i)) continue;
    bool minimal = true;
    for (int d : down_[i])
      if (s.test(d)) {
        minimal = false;
        break;
      }
    if (minimal) out.set(i);
  }
  return out;
}

Bitset Poset::maximal_of(const Bitset& s) const {
  Bitset out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (!s.test(i)) continue;
    bool maximal = true;
    for (int u : up_[i])
      if (s.test(u)) {
        maximal = false;
        break;
      }
    if (maximal) out.set(i);
  }
  return out;
}

Poset build_poset(std::vector<std::string> elements,
                  std::vector<std::pair<std::string, std::string>> covers) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (idx.count(elements[i])) throw PosetError("duplicate element name");
    idx[elements[i]] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> c;
  c.reserve(covers.size());
  for (auto& [a, b] : covers) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end() || ib == idx.end())
      throw PosetError("cover references undeclared element");
    c.emplace_back(ia->second, ib->second);
  }
  return Poset(std::move(elements), std::move(c));
}

std::vector<int> linear_extension(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<int> indeg(n, 0), out;
  for (std::size_t i = 0; i < n; ++i)
    indeg[i] = static_cast<int>(p.lower_covers(static_cast<int>(i)).size());
  std::vector<bool> used(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    int pick = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i] && indeg[i] == 0) {
        pick = static_cast<int>(i);
        break;
      }
    used[pick] = true;
    out.push_back(pick);
    for (int v : p.upper_covers(pick)) indeg[v]--;
  }
  return out;
}

std::vector<Bitset> enumerate_ideals(const Poset& p, std::size_t cap) {
  const auto ext = linear_extension(p);
  std::vector<Bitset> out;
  Bitset cur(p.size());
  // Iterative DFS over the extension, deciding membership of each element.
  struct Frame {
    std::size_t k;
    int stage;  // 0: try exclude, 1: try include, 2: unwind
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    auto& f = stack.back();
    if (f.k == ext.size()) {
      if (out.size() >= cap)
        throw CapExceeded("ideal cap exceeded (" + std::to_string(cap) + ")");
      out.push_back(cur);
      stack.pop_back();
      continue;
    }
    const int e = ext[f.k];
    if (f.stage == 0) {
      f.stage = 1;
      stack.push_back({f.k + 1, 0});
    } else if (f.stage == 1) {
      bool can = true;
      for (int d : p.lower_covers(e))
        if (!cur.test(d)) {
          can = false;
          break;
        }
      f.stage = 2;
      if (can) {
        cur.set(e);
        stack.push_back({f.k + 1, 0});
      }
    } else {
      cur.set(e, false);
      stack.pop_back();
    }
  }
  std::sort(out.begin(), out.end(), Bitset::lex_less);
  return out;
}

Bitset toggle(const Poset& p, const Bitset& ideal, int e) {
  if (e < 0 || e >= static_cast<int>(p.size()))
    throw PosetError("toggle: unknown element");
  Bitset out = ideal;
  if (!ideal.test(e)) {
    out.set(e);
    if (p.is_ideal(out)) return out;
    return ideal;
  }
  out.set(e, false);
  if (p.is_ideal(out)) return out;
  return ideal;
}

Bitset rowmotion(const Poset& p, const Bitset& ideal, RowmotionMethod method) {
  if (method == RowmotionMethod::generators) {
    Bitset comp = p.full_set().minus(ideal);
    return p.generated_ideal(p.minimal_of(comp));
  }
  return rowmotion_toggles(p, ideal, linear_extension(p));
}

Bitset rowmotion_toggles(const Poset& p, const Bitset& ideal,
                         const std::vector<int>& extension) {
  Bitset cur = ideal;
  for (auto it = extension.rbegin(); it != extension.rend(); ++it)
    cur = toggle(p, cur, *it);
  return cur;
}

Bitset rowmotion_inverse(const Poset& p, const Bitset& ideal) {
  Bitset up(p.size());
  const Bitset mx = p.maximal_of(ideal);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (mx.test(i)) up = up | p.upset(static_cast<int>(i));
  return p.full_set().minus(up);
}

std::vector<std::size_t> OrbitDecomposition::sorted_sizes() const {
  std::vector<std::size_t> s;
  s.reserve(orbits.size());
  for (const auto& o : orbits) s.push_back(o.size());
  std::sort(s.begin(), s.end());
  return s;
}

OrbitDecomposition orbit_decomposition(const Poset& p, const IdealMap& action,
                                       std::size_t cap) {
  IdealMap act = action;
  if (!act)
    act = [](const Poset& q, const Bitset& i) { return rowmotion(q, i); };
  OrbitDecomposition dec;
  dec.ideals = enumerate_ideals(p, cap);
  std::unordered_map<Bitset, std::size_t, BitsetHash> index;
  for (std::size_t i = 0; i < dec.ideals.size(); ++i) index[dec.ideals[i]] = i;
  std::vector<bool> visited(dec.ideals.size(), false);
  for (std::size_t i = 0; i < dec.ideals.size(); ++i) {
    if (visited[i]) continue;
    std::vector<std::size_t> orbit;
    std::size_t cur = i;
    do {
      visited[cur] = true;
      orbit.push_back(cur);
      const Bitset next = act(p, dec.ideals[cur]);
      auto it = index.find(next);
      if (it == index.end())
        throw PosetError("action left the ideal lattice");
      cur = it->second;
    } while (cur != i);
    dec.orbits.push_back(std::move(orbit));
  }
  return dec;
}

}  // namespace rowlab
