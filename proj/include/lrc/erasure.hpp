#pragma once

#include <cstdint>
#include <vector>

#include "lrc/analysis.hpp"
#include "lrc/matroid.hpp"

namespace lrc {

struct RepairEvent {
  int element = 0;
  Subset locality_set;
  /// Symbols read: |S \ erased| at the start of the round.
  int contacts = 0;
  int round = 0;

  friend bool operator==(const RepairEvent&, const RepairEvent&) = default;
};

struct ErasurePattern {
  Subset erased;
  std::vector<RepairEvent> trace;
};

/// rho(E \ erased) = rho(E).
bool is_globally_decodable(const Matroid& m, Subset erased);

/// One synchronous round: every erased x (ascending) is repaired from the
/// first set S in [S_x, then other cover sets containing x in cover order]
/// with rho((S \ erased) u x) = rho(S \ erased), using only symbols present
/// at the start of the round.
ErasurePattern local_repair_step(const Matroid& m, const LocalityCover& cover, ErasurePattern pattern,
                                 int round = 1);

struct PeelResult {
  ErasurePattern pattern;
  bool fully_repaired = false;
  int rounds = 0;
};

/// Repeats local_repair_step until nothing changes.
PeelResult peel_repair(const Matroid& m, const LocalityCover& cover, ErasurePattern pattern);

/// Exact counts; rates are derived from them on output.
struct MonteCarloStats {
  double p = 0.0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t locally_repaired = 0;
  std::int64_t globally_decodable = 0;
  std::int64_t lost = 0;
  std::int64_t erasures = 0;
  std::int64_t repair_events = 0;
  std::int64_t contacts = 0;

  friend bool operator==(const MonteCarloStats&, const MonteCarloStats&) = default;
};

/// Independent Bernoulli(p) erasures per trial. Trial t draws from
/// mt19937_64 seeded with seed_seq{seed, t} (split into 32-bit words); an
/// element is erased when a 53-bit uniform draw is below p. Results do not
/// depend on `threads`.
MonteCarloStats monte_carlo(const Matroid& m, const LocalityCover& cover, double p, std::int64_t trials,
                            std::uint64_t seed, int threads = 1);

/// The erased set of one Monte-Carlo trial.
Subset sample_erasures(int n, double p, std::uint64_t seed, std::int64_t trial);

struct ExhaustiveRow {
  int size = 0;
  std::int64_t patterns = 0;
  std::int64_t globally_decodable = 0;
  std::int64_t locally_repaired = 0;
};

/// Every erasure pattern with at most max_erasures elements, grouped by size.
std::vector<ExhaustiveRow> exhaustive_erasures(const Matroid& m, const LocalityCover& cover, int max_erasures);

}  // namespace lrc
