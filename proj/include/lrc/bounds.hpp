#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrc/analysis.hpp"
#include "lrc/constructions.hpp"

namespace lrc {

/// Two-case lower bound on d_max for b > a:
///   n-k+1-ceil(k/r)(delta-1)          if b <= r-1
///   n-k+1-ceil(k/r)(delta-1) + (b-r)  if b >= r
/// Throws BadParams on invalid tuples or b <= a.
int old_lower_bound(int n, int k, int r, int delta);

enum class Theorem14Branch { kRemaining, kSpread };

std::string_view to_string(Theorem14Branch branch);

/// The improved lower bound with every intermediate quantity.
struct Theorem14Bound {
  int value = 0;
  Theorem14Branch branch = Theorem14Branch::kRemaining;
  int m = 0;          // ceil(n/(r+delta-1)) - 1
  int q = 0;          // floor((r+delta-1-b)/m)
  int v = 0;          // r+delta-1-b - q m
  int remaining = 0;  // n-k+1-ceil(k/r)(delta-1)
  int d_new = 0;      // n-k+1-(ceil(k/r)-1)(q+delta-1) - min(v, ceil(k/r)-1)
  int d_old = 0;      // remaining + (b-r)
  int gap_bound = 0;  // q (m - ceil(k/r) + 1)
};

/// Branch kRemaining when delta-1 <= (ceil(k/r)-1) q + min(v, ceil(k/r)-1),
/// otherwise kSpread with value d_new. Throws BadParams on invalid tuples,
/// b <= a or r >= k.
Theorem14Bound theorem14_lower_bound(int n, int k, int r, int delta);

/// (ceil(k/r)-1) floor(s/m) + min(ceil(k/r)-1, s - floor(s/m) m) with
/// s = n - r m: the least possible largest nullity of ceil(k/r)-1 atoms when
/// m atoms of rank at most r cover n elements. Throws BadParams when m < 1
/// or n < r m.
int even_distribution_nullity_bound(int n, int k, int r, int m);

/// Disjoint atoms with alpha = 0 and beta split ceil/floor at v.
ConstructionGraph theorem14_graph(int n, int k, int r, int delta);
AtomMatroid theorem14_construction(int n, int k, int r, int delta);

/// One step of nullity redistribution on a subclass matroid with target
/// locality (r, delta). F_u is the lowest atom with nullity above delta-1 and
/// x its lowest private element. x moves to the lowest atom of rank below r,
/// or else replaces the lowest element y of the first intersecting pair
/// (F_k, F_l) in F_k. Throws NoExcessNullity, NoDonorPair or
/// PreconditionFailed.
AtomMatroid redistribute_nullity(const AtomMatroid& am, int r, int delta);

/// Repeats redistribute_nullity until every atom has nullity delta-1 and
/// returns every intermediate matroid (the input first).
std::vector<AtomMatroid> redistribute_until_optimal(const AtomMatroid& am, int r, int delta);

/// Largest |I| with F_I in Z_{<k}.
int max_below_k_size(const AtomMatroid& am);

enum class Verdict { kYes, kNo, kUnknown };

std::string_view to_string(Verdict verdict);

struct BoundReport {
  ParamTuple params;
  int singleton = 0;
  std::optional<int> old_lower;
  std::optional<Theorem14Bound> new_lower;
  Verdict verdict = Verdict::kUnknown;
  /// "uniform", "broad" or "theorem11" for Yes verdicts.
  std::string witness;
  std::optional<Matroid> witness_matroid;
  /// How the witness was checked: "achieves_bound" or "cyclic_flats" (large n).
  std::string witness_check;
  std::string reason;
};

/// Disjoint atoms of size r+delta-1 with b elements removed from the last
/// one: ceil(n/(r+delta-1)) atoms, every nullity delta-1. Needs b <= a.
AtomMatroid broad_witness(int n, int k, int r, int delta);

/// Classifies whether the generalized Singleton bound is reachable. Never
/// returns kNo. Witnesses are checked with achieves_bound when n <= limit and
/// through the cyclic-flat distance formula otherwise. Throws BadParams.
BoundReport classify_achievability(int n, int k, int r, int delta, int full_check_limit = 12);

}  // namespace lrc
