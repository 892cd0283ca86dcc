#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <string>
#include <vector>

#include "lrc/constructions.hpp"
#include "lrc/matroid.hpp"

namespace lrc::oracle {

/// Rank by greedy growth of an independent set. Independence comes from the
/// stored representation without any rank-extension formula: family lookup,
/// table lookup, or |I n Z| <= rho(Z) for every stored cyclic flat.
class BruteRank {
 public:
  explicit BruteRank(const Matroid& m);

  int size() const { return n_; }
  bool independent(std::uint64_t set) const;
  int rank(std::uint64_t set) const;

 private:
  int n_;
  Matroid m_;
  std::unordered_set<std::uint64_t> family_;
};

/// min |X| with rho(E \ X) < rho(E), scanning sizes upward. n <= 20.
/// Throws TooLarge or RankZero.
int oracle_d(const Matroid& m);

/// Exhaustive search for a cyclic S containing each x with |S| <= r+delta-1
/// and every removal of at most delta-1 elements keeping rho(S). n <= 16.
bool oracle_locality(const Matroid& m, int r, int delta);

/// Counts per nonempty membership pattern (index = pattern mask over [m]),
/// minimised over relabelings of the atoms.
std::vector<int> canonical_layout(const std::vector<AtomSpec>& atoms);

struct LayoutSearch {
  /// Best d over all admissible layouts; nullopt when none exists.
  std::optional<int> best_d;
  int best_m = 0;
  std::vector<AtomSpec> best_atoms;
  std::int64_t layouts_checked = 0;
  int singleton = 0;

  bool optimal() const { return best_d && *best_d == singleton; }
};

/// Enumerates atom layouts up to relabeling for the restricted-intersection
/// subclass with locality (r, delta): every atom has rank <= r, nullity >=
/// delta-1 and fewer shared elements than its rank. Ranks are taken maximal,
/// which never lowers d. Uses m atoms when given, otherwise every m from
/// ceil(k/r) to n/delta. n <= 10.
LayoutSearch exhaust_theorem9_layouts(int n, int k, int r, int delta, std::optional<int> m = std::nullopt);

struct OracleVerdict {
  std::string subject;
  std::string expected;
  std::string actual;
  bool agree = true;
  std::vector<Subset> witnesses;
};

/// Compares the library's rank, d and (when r, delta are given) locality
/// against the brute-force oracles.
std::vector<OracleVerdict> verify(const Matroid& m, std::optional<int> r = std::nullopt,
                                  std::optional<int> delta = std::nullopt);

}  // namespace lrc::oracle
