#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rowlab/bitset.hpp"

namespace rowlab {

struct PosetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an enumeration would exceed the configured ideal cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultIdealCap = 2'000'000;

// Finite poset over named elements.  Element order is the declared order and
// is the canonical order for ideal bitsets everywhere.
class Poset {
 public:
  Poset() = default;
  // Validates: covers reference declared elements, the relation is acyclic,
  // and the cover set is its own transitive reduction.
  Poset(std::vector<std::string> elements,
        std::vector<std::pair<int, int>> covers);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  int index_of(const std::string& name) const;

  const std::vector<int>& upper_covers(int i) const { return up_[i]; }
  const std::vector<int>& lower_covers(int i) const { return down_[i]; }

  // x <= y
  bool leq(int x, int y) const { return below_[y].test(x); }
  const Bitset& downset(int i) const { return below_[i]; }
  const Bitset& upset(int i) const { return above_[i]; }

  // Rank function normalized to minimum 1; present iff the poset is graded
  // (all maximal chains have the same size).
  const std::optional<std::vector<int>>& rank() const { return rank_; }
  bool graded() const { return rank_.has_value(); }
  int max_rank() const;

  // Overrides the rank with an externally supplied one (shape posets carry
  // the ambient coordinate rank).  Must satisfy the unit-cover law.
  void set_rank(std::vector<int> rank);

  bool is_ideal(const Bitset& s) const;
  bool is_antichain(const Bitset& s) const;

  Bitset empty_set() const { return Bitset(size()); }
  Bitset full_set() const;

  // Order ideal generated by a subset.
  Bitset generated_ideal(const Bitset& gens) const;
  Bitset minimal_of(const Bitset& s) const;
  Bitset maximal_of(const Bitset& s) const;

 private:
  std::vector<std::string> elements_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<Bitset> below_, above_;  // reflexive closures
  std::optional<std::vector<int>> rank_;
};

Poset build_poset(std::vector<std::string> elements,
                  std::vector<std::pair<std::string, std::string>> covers);

// Smallest-canonical-index-first topological order.
std::vector<int> linear_extension(const Poset& p);

// All order ideals, each once, sorted lexicographically on the membership
// bitset.  Throws CapExceeded beyond `cap` ideals.
std::vector<Bitset> enumerate_ideals(const Poset& p,
                                     std::size_t cap = kDefaultIdealCap);

// Three-case toggle at element e; an involution on J(P).
Bitset toggle(const Poset& p, const Bitset& ideal, int e);

enum class RowmotionMethod { generators, toggles };

Bitset rowmotion(const Poset& p, const Bitset& ideal,
                 RowmotionMethod method = RowmotionMethod::generators);
// Toggle route along a caller-chosen linear extension (largest toggled first).
Bitset rowmotion_toggles(const Poset& p, const Bitset& ideal,
                         const std::vector<int>& extension);
Bitset rowmotion_inverse(const Poset& p, const Bitset& ideal);

using IdealMap = std::function<Bitset(const Poset&, const Bitset&)>;

struct OrbitDecomposition {
  std::vector<Bitset> ideals;                  // canonical enumeration
  std::vector<std::vector<std::size_t>> orbits;  // indices into `ideals`
  std::vector<std::size_t> sorted_sizes() const;
};

// Partitions J(P) into orbits of an invertible ideal map (rowmotion by
// default).  Representatives are the canonically least unvisited ideals, in
// order.
OrbitDecomposition orbit_decomposition(const Poset& p,
                                       const IdealMap& action = {},
                                       std::size_t cap = kDefaultIdealCap);

}  // namespace rowlab
