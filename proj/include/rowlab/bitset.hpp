#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace rowlab {

// Fixed-universe dynamic bitset used for order ideals and antichains.
// Canonical comparison is lexicographic on the bit string b_0 b_1 ... b_{n-1},
// element 0 read first.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v = true) {
    const std::uint64_t m = std::uint64_t(1) << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }

  bool none() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  Bitset operator|(const Bitset& o) const {
    Bitset r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] | o.w_[k];
    return r;
  }

  Bitset operator&(const Bitset& o) const {
    Bitset r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }

  // this minus o
  Bitset minus(const Bitset& o) const {
    Bitset r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & ~o.w_[k];
    return r;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  // Lexicographic on the membership string, element 0 most significant.
  static bool lex_less(const Bitset& a, const Bitset& b) {
    for (std::size_t k = 0; k < a.w_.size(); ++k) {
      if (a.w_[k] == b.w_[k]) continue;
      const std::uint64_t diff = a.w_[k] ^ b.w_[k];
      const int bit = __builtin_ctzll(diff);
      return !((a.w_[k] >> bit) & 1u);
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : w_) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h ^ n_;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace rowlab
