#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace bimlab {

// Fixed-capacity bitset sized at runtime. Carriers here are tiny (a few
// hundred bits at most), so a word vector beats std::set by a wide margin
// in the closure fixpoint loops.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool operator==(const Bitset& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  // subset test
  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  // Total order used to canonicalize enumeration output: by popcount, then
  // by words from the low end. Any fixed order works; this one keeps small
  // (low) sets first, which makes dumps readable.
  bool canonical_less(const Bitset& o) const {
    int ca = count(), cb = o.count();
    if (ca != cb) return ca < cb;
    for (std::size_t i = words_.size(); i-- > 0;)
      if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
    return false;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < nbits_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }

private:
  void trim() {
    if (nbits_ & 63) words_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
  }

  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace bimlab
