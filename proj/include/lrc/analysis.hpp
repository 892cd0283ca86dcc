#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrc/matroid.hpp"

namespace lrc {

constexpr int ceil_div(int num, int den) { return (num + den - 1) / den; }

/// The (n, k, r, delta) tuple of an LRC parameter question together with the
/// slack constants relative to the broad matroid.
struct ParamTuple {
  int n = 0;
  int k = 0;
  int r = 0;
  int delta = 0;

  int locality_size() const { return r + delta - 1; }
  int k_max() const { return ceil_div(k, r) * r; }
  int n_max() const { return ceil_div(n, locality_size()) * locality_size(); }
  /// a = ceil(k/r) r - k
  int a() const { return k_max() - k; }
  /// b = ceil(n/(r+delta-1)) (r+delta-1) - n
  int b() const { return n_max() - n; }
};

/// Full LRC parameters of a matroid.
struct LrcParams {
  int n = 0;
  int k = 0;
  int d = 0;
  int r = 0;
  int delta = 0;

  ParamTuple tuple() const { return {n, k, r, delta}; }
};

/// (n, k, d) of a matroid.
struct BasicParams {
  int n = 0;
  int k = 0;
  int d = 0;
};

/// Why (n, k, r, delta) is not a valid parameter tuple, or nullopt when it is.
/// Requires n, k >= 1, 1 <= r <= k, delta >= 2 and k <= n - ceil(k/r)(delta-1).
std::optional<std::string> param_violation(const ParamTuple& p);
bool validate_params(int n, int k, int r, int delta);

/// n - k + 1 - (ceil(k/r) - 1)(delta - 1). Throws BadParams on n, k, r < 1,
/// delta < 2 or k > n.
int singleton_bound(int n, int k, int r, int delta);

/// n, k = rho(E), and d = min{|X| : rho(E \ X) < rho(E)}. Throws RankZero.
BasicParams params_from_matroid(const Matroid& m);

/// d = n - k + 1 - max nullity over the coatoms. Throws TopNotE or RankZero.
int d_from_cyclic_flats(const CyclicFlatLattice& lattice);

/// d(M|S): the smallest X inside S with rho(S \ X) < rho(S). nullopt when
/// rho(S) = 0, which counts as infinitely distant.
std::optional<int> restricted_distance(const Matroid& m, Subset s);

/// S is cyclic, |S| <= r + delta - 1 and d(M|S) >= delta.
bool is_locality_set(const Matroid& m, Subset s, int r, int delta);

/// One chosen locality set S_x per ground element.
struct LocalityCover {
  int r = 0;
  int delta = 0;
  std::vector<Subset> sets;
};

/// Searches, for each x, the smallest locality set containing x, breaking
/// ties lexicographically. nullopt when some element has none.
std::optional<LocalityCover> has_locality(const Matroid& m, int r, int delta);

/// Throws PreconditionFailed unless every S_x contains x and is a locality set.
void require_valid_cover(const Matroid& m, const LocalityCover& cover);

/// d equals the generalized Singleton bound. Throws NoLocality.
bool achieves_bound(const Matroid& m, int r, int delta);

struct ConditionResult {
  std::string id;
  bool ok = true;
  std::string detail;
  std::vector<Subset> witnesses;
};

struct StructureReport {
  std::vector<ConditionResult> conditions;
  /// Number of nontrivial-union subcollections examined for (iii).
  int collections_checked = 0;

  bool ok() const;
  const ConditionResult* first_failure() const;
};

/// Evaluates the necessary conditions an optimal matroid must satisfy: (i),
/// (ii)a-b per element and (iii)c-f over every nontrivial-union subcollection
/// of at most ceil(k/r) distinct cover sets that are cyclic flats. Throws
/// PreconditionFailed when r >= k or the cover is invalid.
StructureReport check_structure_theorem(const Matroid& m, const LocalityCover& cover);

/// 0_Z = Y_0 < Y_1 < ... < Y_m = E with Y_j = cl(Y_{j-1} u S_j).
struct FlatChain {
  int r = 0;
  int delta = 0;
  std::vector<Subset> flats;           // Y_0 .. Y_m
  std::vector<Subset> locality_sets;   // S_1 .. S_m

  int length() const { return static_cast<int>(locality_sets.size()); }
};

/// Builds the chain greedily from the cover (first cover set not yet inside
/// Y_{j-1}). Throws ChainStalled if the cover does not reach E.
FlatChain find_locality_chain(const Matroid& m, const LocalityCover& cover);

struct ChainInequalities {
  int d = 0;
  int distance_bound = 0;   // n - k + 1 - eta(Y_{m-1})
  int length = 0;           // m
  int min_length = 0;       // ceil(k/r)
  bool steps_ok = true;     // rank step <= r and nullity step >= delta-1

  bool ok() const { return steps_ok && d <= distance_bound && length >= min_length; }
};

ChainInequalities check_chain_inequalities(const Matroid& m, const FlatChain& chain);

}  // namespace lrc
