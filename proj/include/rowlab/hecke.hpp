#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rowlab/tableau.hpp"

namespace rowlab {

using Word = std::vector<int>;

// Permutation in one-line notation on {1..n}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  explicit Permutation(std::vector<int> oneline);

  int size() const { return static_cast<int>(line_.size()); }
  int operator()(int i) const { return line_[i - 1]; }  // 1-based
  const std::vector<int>& oneline() const { return line_; }
  int inverse_of(int value) const;  // position of `value`

  // Pads with fixed points so domains match, then compares.
  static bool equal_padded(const Permutation& a, const Permutation& b);

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> line_;
};

// Demazure product with a simple transposition: w if w(i) > w(i+1), else
// w*s_i.  Extends w with fixed points as needed.
Permutation hecke_right_product(Permutation w, int i);

// Fold the word from its last letter to its first, starting at the identity
// on max(letters)+1 points.
Permutation hecke_permutation(const Word& w);

Permutation hecke_of_tableau(const IncreasingTableau& t);

// Words reachable by one basic move (both directions).  Letter-doubling
// insertions are emitted only up to max_len.
std::vector<Word> knuth_neighbors(const Word& w, bool weak,
                                  std::size_t max_len);

enum class Verdict { equivalent, distinct, unknown };

struct EquivalenceResult {
  Verdict verdict = Verdict::unknown;
  // one-line description of the certificate (move path or invariant)
  std::string certificate;
  std::vector<Word> path;  // populated for `equivalent`
};

inline constexpr std::size_t kDefaultMaxStates = 1'000'000;

// Bounded BFS over basic moves; refutation by the Demazure-product
// invariant applies to the strong relation only.
EquivalenceResult equivalent_bounded(const Word& w1, const Word& w2, bool weak,
                                     std::size_t max_len = 0,
                                     std::size_t max_states = kDefaultMaxStates);

// Boxes where the entry equals the box rank; downward closed (checked).
Bitset minimal_ideal(const ShapePoset& sp, const IncreasingTableau& t);

struct FirstPositionRow {
  int letter = 0;
  int inverse_position = 0;   // w(T)^{-1}(letter)
  int row_ideal_count = 0;    // |R_letter ∩ I0|
  std::string case_label;     // "drop" (strict decrease), "flat", "first-row"
};

// Per-row first-appearance data of the Demazure permutation of a straight
// ordinary tableau against its minimal ideal.
std::vector<FirstPositionRow> hecke_first_position_report(
    const ShapePoset& sp, const IncreasingTableau& t);

}  // namespace rowlab
