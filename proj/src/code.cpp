#include "lrc/code.hpp"

#include <algorithm>

#include "lrc/error.hpp"

namespace lrc {
namespace {

// Explicit enumeration only.
constexpr std::size_t kMaxCodewords = std::size_t{1} << 20;

}  // namespace

BlockCode::BlockCode(int alphabet_size, int length, std::vector<Codeword> codewords)
    : s_(alphabet_size), n_(length), words_(std::move(codewords)) {
  if (s_ < 2) throw Error(ErrorCode::kBadParams, "alphabet size must be at least 2");
  if (n_ < 0 || n_ > kMaxGroundSize) throw Error(ErrorCode::kTooLarge, "code length outside 0..64");
  if (words_.empty()) throw Error(ErrorCode::kBadParams, "a code needs at least one codeword");
  if (words_.size() > kMaxCodewords) throw Error(ErrorCode::kTooLarge, "more than 2^20 codewords");
  for (const auto& w : words_) {
    if (static_cast<int>(w.size()) != n_) {
      throw Error(ErrorCode::kBadParams, "codeword length differs from n");
    }
    for (int symbol : w) {
      if (symbol < 0 || symbol >= s_) throw Error(ErrorCode::kBadParams, "symbol outside the alphabet");
    }
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

BlockCode project(const BlockCode& code, Subset x) {
  const std::vector<int> coords = x.elements();
  if (!x.is_subset_of(Subset::full(code.length()))) {
    throw Error(ErrorCode::kBadParams, "projection coordinates outside the code length");
  }
  std::vector<Codeword> out;
  out.reserve(code.size());
  for (const auto& w : code.codewords()) {
    Codeword p;
    p.reserve(coords.size());
    for (int c : coords) p.push_back(w[c]);
    out.push_back(std::move(p));
  }
  return BlockCode(code.alphabet_size(), static_cast<int>(coords.size()), std::move(out));
}

std::optional<int> exact_log(long long count, int base) {
  if (count < 1) return std::nullopt;
  int exponent = 0;
  long long power = 1;
  while (power < count) {
    power *= base;
    ++exponent;
  }
  if (power != count) return std::nullopt;
  return exponent;
}

bool is_almost_affine(const BlockCode& code) {
  if (code.length() > kMaxTableGroundSize) throw Error(ErrorCode::kTooLarge, "code too long to scan");
  const std::uint64_t count = std::uint64_t{1} << code.length();
  for (std::uint64_t b = 0; b < count; ++b) {
    const auto size = static_cast<long long>(project(code, Subset(b)).size());
    if (!exact_log(size, code.alphabet_size())) return false;
  }
  return true;
}

Matroid induce_matroid(const BlockCode& code) {
  if (code.length() > kMaxTableGroundSize) throw Error(ErrorCode::kTooLarge, "code too long to scan");
  RankTable table{code.length(), std::vector<int>(std::size_t{1} << code.length())};
  for (std::uint64_t b = 0; b < table.ranks.size(); ++b) {
    const Subset x(b);
    const auto size = static_cast<long long>(project(code, x).size());
    const auto r = exact_log(size, code.alphabet_size());
    if (!r) {
      throw Error(ErrorCode::kNotAlmostAffine, "|C_X| = " + std::to_string(size) +
                                                   " is not a power of " +
                                                   std::to_string(code.alphabet_size()) +
                                                   " for X = " + x.to_string_one_based());
    }
    table.ranks[b] = *r;
  }
  return Matroid::from_rank_table(std::move(table));
}

std::optional<int> min_distance_or_none(const BlockCode& code) {
  const auto& words = code.codewords();
  if (words.size() < 2) return std::nullopt;
  int best = code.length();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      int dist = 0;
      for (int c = 0; c < code.length(); ++c) dist += words[i][c] != words[j][c];
      best = std::min(best, dist);
    }
  }
  return best;
}

int code_min_distance(const BlockCode& code) {
  const auto d = min_distance_or_none(code);
  if (!d) throw Error(ErrorCode::kSingletonCode, "minimum distance needs at least two codewords");
  return *d;
}

bool is_locality_set_of_code(const BlockCode& code, Subset s, int r, int delta) {
  if (r < 1 || delta < 2) throw Error(ErrorCode::kBadParams, "need r >= 1 and delta >= 2");
  if (s.size() > r + delta - 1) return false;
  const auto d = min_distance_or_none(project(code, s));
  return !d || *d >= delta;
}

BlockCode linear_code(const std::vector<std::vector<int>>& generator, int q) {
  const int k = static_cast<int>(generator.size());
  const int n = k == 0 ? 0 : static_cast<int>(generator.front().size());
  std::vector<Codeword> words;
  std::vector<int> message(k, 0);
  while (true) {
    Codeword w(n, 0);
    for (int i = 0; i < k; ++i) {
      for (int c = 0; c < n; ++c) w[c] = (w[c] + message[i] * generator[i][c]) % q;
    }
    words.push_back(std::move(w));
    int i = 0;
    while (i < k && ++message[i] == q) message[i++] = 0;
    if (i == k) break;
  }
  return BlockCode(q, n, std::move(words));
}

}  // namespace lrc
