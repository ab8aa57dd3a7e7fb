#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "cubescheme/cube_core.hpp"

namespace cubescheme::detail {

__extension__ typedef unsigned __int128 U128;

// Membership set over words of {0,1}^n: a dense bitmap while 2^n stays small,
// a hash set beyond that.
class WordSet {
 public:
  static constexpr int kDenseLimit = 24;

  explicit WordSet(int n) : dense_(n <= kDenseLimit) {
    if (dense_) bits_.assign((std::size_t{1} << n) / 64 + 1, 0);
  }

  template <class Range>
  WordSet(int n, const Range& words) : WordSet(n) {
    for (Word w : words) insert(w);
  }

  // Returns true when w was newly inserted.
  bool insert(Word w) {
    if (dense_) {
      auto& slot = bits_[w >> 6];
      const Word bit = Word{1} << (w & 63);
      if (slot & bit) return false;
      slot |= bit;
      ++size_;
      return true;
    }
    if (!sparse_.insert(w).second) return false;
    ++size_;
    return true;
  }

  bool contains(Word w) const {
    if (dense_) return (bits_[w >> 6] >> (w & 63)) & 1U;
    return sparse_.count(w) != 0;
  }

  std::size_t size() const { return size_; }

 private:
  bool dense_;
  std::size_t size_ = 0;
  std::vector<Word> bits_;
  std::unordered_set<Word> sparse_;
};

// Hash for a (colours, anchor) cube key.
struct PairHash {
  std::size_t operator()(const std::pair<Word, Word>& p) const noexcept {
    Word h = p.first * 0x9E3779B97F4A7C15ULL;
    h ^= p.second + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// Visits every k-subset of the bits of `universe`, lexicographic on the
// ascending coordinate lists.
template <class Fn>
void for_each_subset_of_size(Word universe, int k, Fn&& fn) {
  std::vector<Word> bits;
  for (Word m = universe; m != 0; m &= m - 1) bits.push_back(m & (~m + 1));
  const int n = static_cast<int>(bits.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Word mask = 0;
    for (int i : idx) mask |= bits[i];
    fn(mask);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace cubescheme::detail
