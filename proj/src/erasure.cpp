#include "lrc/erasure.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "lrc/error.hpp"

namespace lrc {
namespace {

std::mt19937_64 trial_engine(std::uint64_t seed, std::int64_t trial) {
  const auto t = static_cast<std::uint64_t>(trial);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
  return std::mt19937_64(seq);
}

void add(MonteCarloStats& into, const MonteCarloStats& part) {
  into.locally_repaired += part.locally_repaired;
  into.globally_decodable += part.globally_decodable;
  into.lost += part.lost;
  into.erasures += part.erasures;
  into.repair_events += part.repair_events;
  into.contacts += part.contacts;
}

}  // namespace

bool is_globally_decodable(const Matroid& m, Subset erased) {
  return m.rank(m.ground() - erased) == m.rank();
}

ErasurePattern local_repair_step(const Matroid& m, const LocalityCover& cover, ErasurePattern pattern,
                                 int round) {
  const Subset erased = pattern.erased;
  Subset repaired;
  for (int x : erased.elements()) {
    auto try_set = [&](Subset s) {
      const Subset available = s - erased;
      if (m.rank(available.with(x)) != m.rank(available)) return false;
      pattern.trace.push_back({x, s, available.size(), round});
      repaired = repaired.with(x);
      return true;
    };
    if (x < static_cast<int>(cover.sets.size()) && try_set(cover.sets[x])) continue;
    for (std::size_t i = 0; i < cover.sets.size(); ++i) {
      const Subset s = cover.sets[i];
      if (static_cast<int>(i) == x || !s.contains(x) || s == cover.sets[x]) continue;
      if (try_set(s)) break;
    }
  }
  pattern.erased -= repaired;
  return pattern;
}

PeelResult peel_repair(const Matroid& m, const LocalityCover& cover, ErasurePattern pattern) {
  PeelResult out;
  while (!pattern.erased.empty()) {
    const Subset before = pattern.erased;
    pattern = local_repair_step(m, cover, std::move(pattern), out.rounds + 1);
    if (pattern.erased == before) break;
    ++out.rounds;
  }
  out.fully_repaired = pattern.erased.empty();
  out.pattern = std::move(pattern);
  return out;
}

Subset sample_erasures(int n, double p, std::uint64_t seed, std::int64_t trial) {
  auto engine = trial_engine(seed, trial);
  Subset erased;
  for (int e = 0; e < n; ++e) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    if (u < p) erased = erased.with(e);
  }
  return erased;
}

MonteCarloStats monte_carlo(const Matroid& m, const LocalityCover& cover, double p, std::int64_t trials,
                            std::uint64_t seed, int threads) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::kBadParams, "p must lie in [0, 1]");
  if (trials < 1) throw Error(ErrorCode::kBadParams, "trials must be at least 1");
  threads = std::max(1, threads);

  auto run_range = [&](std::int64_t begin, std::int64_t end, MonteCarloStats& out) {
    for (std::int64_t t = begin; t < end; ++t) {
      const Subset erased = sample_erasures(m.size(), p, seed, t);
      out.erasures += erased.size();
      const auto peel = peel_repair(m, cover, ErasurePattern{erased, {}});
      if (peel.fully_repaired) ++out.locally_repaired;
      if (is_globally_decodable(m, erased)) {
        ++out.globally_decodable;
      } else {
        ++out.lost;
      }
      out.repair_events += static_cast<std::int64_t>(peel.pattern.trace.size());
      for (const auto& ev : peel.pattern.trace) out.contacts += ev.contacts;
    }
  };

  MonteCarloStats total{p, trials, seed, 0, 0, 0, 0, 0, 0};
  std::vector<MonteCarloStats> parts(threads);
  std::vector<std::thread> workers;
  const std::int64_t chunk = (trials + threads - 1) / threads;
  for (int i = 0; i < threads; ++i) {
    const std::int64_t begin = std::min(trials, chunk * i);
    const std::int64_t end = std::min(trials, begin + chunk);
    if (threads == 1) {
      run_range(begin, end, parts[i]);
    } else {
      workers.emplace_back(run_range, begin, end, std::ref(parts[i]));
    }
  }
  for (auto& w : workers) w.join();
  for (const auto& part : parts) add(total, part);
  return total;
}

std::vector<ExhaustiveRow> exhaustive_erasures(const Matroid& m, const LocalityCover& cover, int max_erasures) {
  if (m.size() > kMaxTableGroundSize) throw Error(ErrorCode::kTooLarge, "ground set too large to enumerate");
  std::vector<ExhaustiveRow> rows;
  for (int s = 0; s <= std::min(max_erasures, m.size()); ++s) {
    ExhaustiveRow row{s, 0, 0, 0};
    for_each_subset_of_size(m.ground(), s, [&](Subset erased) {
      ++row.patterns;
      if (is_globally_decodable(m, erased)) ++row.globally_decodable;
      if (peel_repair(m, cover, ErasurePattern{erased, {}}).fully_repaired) ++row.locally_repaired;
      return true;
    });
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lrc
