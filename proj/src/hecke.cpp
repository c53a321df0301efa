#include "rowlab/hecke.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace rowlab {

Permutation::Permutation(int n) : line_(n) {
  for (int i = 0; i < n; ++i) line_[i] = i + 1;
}

Permutation::Permutation(std::vector<int> oneline) : line_(std::move(oneline)) {
  std::vector<bool> seen(line_.size(), false);
  for (int v : line_) {
    if (v < 1 || v > static_cast<int>(line_.size()) || seen[v - 1])
      throw std::invalid_argument("not a permutation");
    seen[v - 1] = true;
  }
}

int Permutation::inverse_of(int value) const {
  for (int i = 0; i < size(); ++i)
    if (line_[i] == value) return i + 1;
  if (value >= 1) return value;  // fixed point outside the stored domain
  throw std::invalid_argument("value outside permutation domain");
}

bool Permutation::equal_padded(const Permutation& a, const Permutation& b) {
  const int n = std::max(a.size(), b.size());
  for (int i = 1; i <= n; ++i) {
    const int av = i <= a.size() ? a(i) : i;
    const int bv = i <= b.size() ? b(i) : i;
    if (av != bv) return false;
  }
  return true;
}

Permutation hecke_right_product(Permutation w, int i) {
  if (i < 1) throw std::invalid_argument("transposition index must be >= 1");
  std::vector<int> line = w.oneline();
  while (static_cast<int>(line.size()) < i + 1)
    line.push_back(static_cast<int>(line.size()) + 1);
  if (line[i - 1] < line[i]) std::swap(line[i - 1], line[i]);
  return Permutation(std::move(line));
}

Permutation hecke_permutation(const Word& w) {
  int top = 0;
  for (int a : w) {
    if (a < 1) throw std::invalid_argument("letters must be positive");
    top = std::max(top, a);
  }
  Permutation p(top + 1);
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    p = hecke_right_product(std::move(p), *it);
  return p;
}

Permutation hecke_of_tableau(const IncreasingTableau& t) {
  return hecke_permutation(reading_word(t));
}

std::vector<Word> knuth_neighbors(const Word& w, bool weak,
                                  std::size_t max_len) {
  std::set<Word> out;
  const std::size_t n = w.size();
  // uaav <-> uav
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (w[i] == w[i + 1]) {
      Word v(w);
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
      out.insert(std::move(v));
    }
  if (n + 1 <= max_len)
    for (std::size_t i = 0; i < n; ++i) {
      Word v(w);
      v.insert(v.begin() + static_cast<std::ptrdiff_t>(i), w[i]);
      out.insert(std::move(v));
    }
  // uabav <-> ubabv
  for (std::size_t i = 0; i + 2 < n; ++i)
    if (w[i] == w[i + 2] && w[i] != w[i + 1]) {
      Word v(w);
      v[i] = w[i + 1];
      v[i + 1] = w[i];
      v[i + 2] = w[i + 1];
      out.insert(std::move(v));
    }
  // swap the last two of a triple when the first lies strictly between them;
  // swap the first two when the last lies strictly between them
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const int x = w[i], y = w[i + 1], z = w[i + 2];
    if ((y < x && x < z) || (z < x && x < y)) {
      Word v(w);
      std::swap(v[i + 1], v[i + 2]);
      out.insert(std::move(v));
    }
    if ((x < z && z < y) || (y < z && z < x)) {
      Word v(w);
      std::swap(v[i], v[i + 1]);
      out.insert(std::move(v));
    }
  }
  if (weak && n >= 2 && w[0] != w[1]) {
    Word v(w);
    std::swap(v[0], v[1]);
    out.insert(std::move(v));
  }
  out.erase(w);
  return {out.begin(), out.end()};
}

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : w) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::string word_to_string(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ".";
    os << w[i];
  }
  return os.str();
}

}  // namespace

EquivalenceResult equivalent_bounded(const Word& w1, const Word& w2, bool weak,
                                     std::size_t max_len,
                                     std::size_t max_states) {
  if (max_len == 0) max_len = std::max(w1.size(), w2.size()) + 2;
  EquivalenceResult res;
  if (w1 == w2) {
    res.verdict = Verdict::equivalent;
    res.certificate = "identical words";
    res.path = {w1};
    return res;
  }
  std::unordered_map<Word, Word, WordHash> parent;
  std::deque<Word> frontier{w1};
  parent[w1] = {};
  bool exhausted_cleanly = true;
  while (!frontier.empty()) {
    Word cur = frontier.front();
    frontier.pop_front();
    for (Word& nb : knuth_neighbors(cur, weak, max_len)) {
      if (parent.count(nb)) continue;
      if (parent.size() >= max_states) {
        exhausted_cleanly = false;
        frontier.clear();
        break;
      }
      parent[nb] = cur;
      if (nb == w2) {
        res.verdict = Verdict::equivalent;
        std::vector<Word> path{nb};
        Word at = cur;
        while (true) {
          path.push_back(at);
          if (at == w1) break;
          at = parent.at(at);
        }
        std::reverse(path.begin(), path.end());
        res.path = std::move(path);
        res.certificate =
            "move path of length " + std::to_string(res.path.size() - 1);
        return res;
      }
      frontier.push_back(std::move(nb));
    }
  }
  // Distinctness needs an invariant certificate; exhausting the bounded
  // search says nothing (paths may transit longer words).
  if (!weak) {
    const Permutation p1 = hecke_permutation(w1), p2 = hecke_permutation(w2);
    if (!Permutation::equal_padded(p1, p2)) {
      res.verdict = Verdict::distinct;
      res.certificate = "demazure products differ: " +
                        word_to_string(p1.oneline()) + " vs " +
                        word_to_string(p2.oneline());
      return res;
    }
  }
  res.verdict = Verdict::unknown;
  res.certificate = exhausted_cleanly ? "length bound exhausted"
                                      : "state bound exhausted";
  return res;
}

Bitset minimal_ideal(const ShapePoset& sp, const IncreasingTableau& t) {
  if (t.shape() != sp.shape)
    throw TableauError("minimal ideal: tableau shape mismatch");
  Bitset out(sp.poset.size());
  for (std::size_t i = 0; i < sp.poset.size(); ++i) {
    const Box b = sp.box_at(static_cast<int>(i));
    if (t.at(b) == sp.shape.rank(b)) out.set(i);
  }
  if (!sp.poset.is_ideal(out))
    throw TableauError("minimal ideal is not downward closed");
  return out;
}

std::vector<FirstPositionRow> hecke_first_position_report(
    const ShapePoset& sp, const IncreasingTableau& t) {
  if (t.kind() != ShapeKind::ordinary || !sp.shape.inner().empty())
    throw TableauError("report requires a straight ordinary tableau");
  const Bitset i0 = minimal_ideal(sp, t);
  const Permutation w = hecke_of_tableau(t);
  std::vector<FirstPositionRow> rows;
  for (int r = 1; r <= sp.shape.rows(); ++r) {
    FirstPositionRow row;
    row.letter = r;
    row.inverse_position = w.inverse_of(r);
    int cnt = 0;
    for (std::size_t i = 0; i < sp.poset.size(); ++i)
      if (i0.test(i) && sp.box_at(static_cast<int>(i)).row == r) ++cnt;
    row.row_ideal_count = cnt;
    if (r == 1) {
      row.case_label = "first-row";
    } else {
      int prev = 0;
      for (std::size_t i = 0; i < sp.poset.size(); ++i)
        if (i0.test(i) && sp.box_at(static_cast<int>(i)).row == r - 1) ++prev;
      row.case_label = (cnt < prev) ? "drop" : "flat";
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace rowlab
