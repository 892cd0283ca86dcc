#pragma once

#include <optional>
#include <vector>

#include "lrc/matroid.hpp"
#include "lrc/subset.hpp"

namespace lrc {

using Codeword = std::vector<int>;

/// An explicit block code: a set of length-n words over {0, ..., s-1}.
/// Codewords are kept sorted and unique.
class BlockCode {
 public:
  BlockCode(int alphabet_size, int length, std::vector<Codeword> codewords);

  int alphabet_size() const { return s_; }
  int length() const { return n_; }
  const std::vector<Codeword>& codewords() const { return words_; }
  std::size_t size() const { return words_.size(); }

 private:
  int s_;
  int n_;
  std::vector<Codeword> words_;
};

/// C_X: the codewords restricted to the coordinates of X (in increasing order),
/// duplicates collapsed.
BlockCode project(const BlockCode& code, Subset x);

/// log_s(count) when count is an exact power of s.
std::optional<int> exact_log(long long count, int base);

bool is_almost_affine(const BlockCode& code);

/// Rank table rho(X) = log_s |C_X|. Throws NotAlmostAffine.
Matroid induce_matroid(const BlockCode& code);

/// Minimum pairwise Hamming distance. Throws SingletonCode when |C| < 2.
int code_min_distance(const BlockCode& code);

/// Minimum distance, or nullopt for a single-word code (no pair to compare).
std::optional<int> min_distance_or_none(const BlockCode& code);

/// |S| <= r + delta - 1 and d(C_S) >= delta. A projection with one word counts
/// as infinitely distant.
bool is_locality_set_of_code(const BlockCode& code, Subset s, int r, int delta);

/// All codewords x * G for a k x n generator over the prime field GF(q).
BlockCode linear_code(const std::vector<std::vector<int>>& generator, int q);

}  // namespace lrc
