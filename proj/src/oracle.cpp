#include "lrc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <variant>

#include "lrc/analysis.hpp"
#include "lrc/error.hpp"

// Deliberately self-contained: plain masks and local loops, so that the
// oracles do not share code with the implementations they check.

namespace lrc::oracle {
namespace {

using Mask = std::uint64_t;

Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Next mask with the same popcount (Gosper).
Mask next_same_popcount(Mask x) {
  const Mask c = x & (~x + 1);
  const Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

// Calls fn on every size-s subset of {0..n-1}; stops when fn returns true.
template <typename Fn>
bool any_of_size(int n, int s, Fn&& fn) {
  if (s == 0) return fn(Mask{0});
  if (s > n) return false;
  const Mask limit = Mask{1} << n;
  for (Mask x = (Mask{1} << s) - 1; x < limit; x = next_same_popcount(x)) {
    if (fn(x)) return true;
    if (s == n) break;
  }
  return false;
}

// Spread the bits of `compact` onto the positions set in `where`.
Mask deposit(Mask compact, Mask where) {
  Mask out = 0;
  for (int i = 0; where != 0; where &= where - 1, ++i) {
    if (compact >> i & 1U) out |= where & (~where + 1);
  }
  return out;
}

}  // namespace

BruteRank::BruteRank(const Matroid& m) : n_(m.size()), m_(m) {
  if (const auto* family = std::get_if<SubsetFamily>(&m.storage())) {
    for (Subset s : *family) family_.insert(s.bits());
  }
}

bool BruteRank::independent(Mask set) const {
  const auto& storage = m_.storage();
  if (std::holds_alternative<SubsetFamily>(storage)) return family_.count(set) != 0;
  if (const auto* table = std::get_if<RankTable>(&storage)) {
    return table->ranks[set] == std::popcount(set);
  }
  const auto& lattice = std::get<CyclicFlatLattice>(storage);
  for (const auto& z : lattice.flats()) {
    if (std::popcount(set & z.set.bits()) > z.rank) return false;
  }
  return true;
}

int BruteRank::rank(Mask set) const {
  Mask basis = 0;
  for (int e = 0; e < n_; ++e) {
    if ((set >> e & 1U) && independent(basis | (Mask{1} << e))) basis |= Mask{1} << e;
  }
  return std::popcount(basis);
}

int oracle_d(const Matroid& m) {
  const int n = m.size();
  if (n > 20) throw Error(ErrorCode::kTooLarge, "oracle distance scan is limited to n <= 20");
  const BruteRank br(m);
  const Mask all = full_mask(n);
  const int k = br.rank(all);
  if (k == 0) throw Error(ErrorCode::kRankZero, "the matroid has rank 0");
  for (int s = 1; s <= n; ++s) {
    if (any_of_size(n, s, [&](Mask x) { return br.rank(all & ~x) < k; })) return s;
  }
  return n + 1;  // unreachable for k > 0
}

bool oracle_locality(const Matroid& m, int r, int delta) {
  const int n = m.size();
  if (n > 16) throw Error(ErrorCode::kTooLarge, "oracle locality search is limited to n <= 16");
  if (r < 1 || delta < 2) throw Error(ErrorCode::kBadParams, "need r >= 1 and delta >= 2");
  const BruteRank br(m);
  const int limit = r + delta - 1;

  auto qualifies = [&](Mask s) {
    const int rs = br.rank(s);
    const int size = std::popcount(s);
    for (int drop = 1; drop <= std::min(delta - 1, size); ++drop) {
      const bool broken = any_of_size(size, drop, [&](Mask local) {
        return br.rank(s & ~deposit(local, s)) != rs;
      });
      if (broken) return false;
    }
    return true;  // removing one element never lowers rank, so s is cyclic
  };

  for (int x = 0; x < n; ++x) {
    const Mask others = full_mask(n) & ~(Mask{1} << x);
    bool found = false;
    for (int extra = 0; extra < limit && !found; ++extra) {
      found = any_of_size(n - 1, extra, [&](Mask local) {
        return qualifies(deposit(local, others) | (Mask{1} << x));
      });
    }
    if (!found) return false;
  }
  return true;
}

std::vector<int> canonical_layout(const std::vector<AtomSpec>& atoms) {
  const int m = static_cast<int>(atoms.size());
  const int patterns = 1 << m;
  std::vector<int> counts(patterns, 0);
  Mask all = 0;
  for (const auto& a : atoms) all |= a.set.bits();
  for (int e = 0; e < 64; ++e) {
    if (!(all >> e & 1U)) continue;
    int pattern = 0;
    for (int i = 0; i < m; ++i) {
      if (atoms[i].set.bits() >> e & 1U) pattern |= 1 << i;
    }
    ++counts[pattern];
  }
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> relabeled(patterns, 0);
    for (int p = 1; p < patterns; ++p) {
      int q = 0;
      for (int i = 0; i < m; ++i) {
        if (p >> i & 1) q |= 1 << perm[i];
      }
      relabeled[q] = counts[p];
    }
    if (best.empty() || relabeled < best) best = std::move(relabeled);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

struct LayoutScore {
  bool admissible = false;
  int d = 0;
  std::vector<int> ranks;
};

LayoutScore score_layout(const std::vector<int>& counts, int m, int n, int k, int r, int delta) {
  LayoutScore out;
  std::vector<int> size(m, 0);
  std::vector<int> shared(m, 0);
  for (int p = 1; p < (1 << m); ++p) {
    for (int i = 0; i < m; ++i) {
      if (!(p >> i & 1)) continue;
      size[i] += counts[p];
      if (p != (1 << i)) shared[i] += counts[p];
    }
  }
  std::vector<int> eta(m);
  out.ranks.resize(m);
  int eta_total = 0;
  for (int i = 0; i < m; ++i) {
    const int rho = std::min(r, size[i] - delta + 1);
    if (rho < 1 || rho <= shared[i]) return out;
    out.ranks[i] = rho;
    eta[i] = size[i] - rho;
    eta_total += eta[i];
  }
  if (k > n - eta_total) return out;

  std::vector<char> below(1 << m, 0);
  int max_eta = 0;
  for (int set = 0; set < (1 << m); ++set) {
    int covered = 0;
    int eta_sum = 0;
    for (int p = 1; p < (1 << m); ++p) {
      if (p & set) covered += counts[p];
    }
    for (int i = 0; i < m; ++i) {
      if (set >> i & 1) eta_sum += eta[i];
    }
    bool ok = covered - eta_sum < k;
    for (int i = 0; i < m && ok; ++i) {
      if (set >> i & 1) ok = below[set & ~(1 << i)] != 0;
    }
    below[set] = ok ? 1 : 0;
    if (ok) max_eta = std::max(max_eta, eta_sum);
  }
  out.admissible = true;
  out.d = n - k + 1 - max_eta;
  return out;
}

std::vector<AtomSpec> materialize(const std::vector<int>& counts, const std::vector<int>& ranks, int m) {
  std::vector<AtomSpec> atoms(m);
  int next = 0;
  for (int p = 1; p < (1 << m); ++p) {
    for (int t = 0; t < counts[p]; ++t, ++next) {
      for (int i = 0; i < m; ++i) {
        if (p >> i & 1) atoms[i].set = atoms[i].set.with(next);
      }
    }
  }
  for (int i = 0; i < m; ++i) atoms[i].rank = ranks[i];
  return atoms;
}

}  // namespace

LayoutSearch exhaust_theorem9_layouts(int n, int k, int r, int delta, std::optional<int> m_fixed) {
  if (n > 10) throw Error(ErrorCode::kTooLarge, "layout search is limited to n <= 10");
  if (n < 1 || k < 1 || r < 1 || delta < 2 || k > n) {
    throw Error(ErrorCode::kBadParams, "need n, k, r >= 1, delta >= 2 and k <= n");
  }
  LayoutSearch out;
  const int big_k = (k + r - 1) / r;
  out.singleton = n - k + 1 - (big_k - 1) * (delta - 1);
  const int m_lo = m_fixed ? *m_fixed : big_k;
  const int m_hi = m_fixed ? *m_fixed : n / delta;

  for (int m = std::max(1, m_lo); m <= m_hi; ++m) {
    const int patterns = 1 << m;
    const int spare = n - m * delta;
    if (spare < 0) continue;
    std::vector<int> counts(patterns, 0);
    for (int i = 0; i < m; ++i) counts[1 << i] = delta;

    // Distribute the spare elements over patterns 1..2^m-1.
    auto visit = [&](auto&& self, int pattern, int left) -> void {
      if (pattern == patterns) {
        if (left != 0) return;
        std::vector<AtomSpec> probe = materialize(counts, std::vector<int>(m, 0), m);
        if (canonical_layout(probe) != counts) return;
        ++out.layouts_checked;
        const auto score = score_layout(counts, m, n, k, r, delta);
        if (score.admissible && (!out.best_d || score.d > *out.best_d)) {
          out.best_d = score.d;
          out.best_m = m;
          out.best_atoms = materialize(counts, score.ranks, m);
        }
        return;
      }
      for (int add = 0; add <= left; ++add) {
        counts[pattern] += add;
        self(self, pattern + 1, left - add);
        counts[pattern] -= add;
      }
    };
    visit(visit, 1, spare);
  }
  return out;
}

std::vector<OracleVerdict> verify(const Matroid& m, std::optional<int> r, std::optional<int> delta) {
  std::vector<OracleVerdict> out;
  const int n = m.size();
  if (n <= 16) {
    const BruteRank br(m);
    OracleVerdict v{"rank", "brute-force rank on every subset", "library rank", true, {}};
    for (Mask x = 0; x < (Mask{1} << n); ++x) {
      if (br.rank(x) != m.rank(Subset(x))) {
        v.agree = false;
        v.expected = std::to_string(br.rank(x));
        v.actual = std::to_string(m.rank(Subset(x)));
        v.witnesses = {Subset(x)};
        break;
      }
    }
    if (v.agree) v.expected = v.actual = "all " + std::to_string(Mask{1} << n) + " subsets";
    out.push_back(std::move(v));
  }
  if (n <= 20 && m.rank() > 0) {
    const int expected = oracle_d(m);
    const int actual = params_from_matroid(m).d;
    out.push_back({"d", std::to_string(expected), std::to_string(actual), expected == actual, {}});
    const auto lattice = m.cyclic_flat_lattice();
    const auto top = lattice.top();
    if (top && top->set == m.ground()) {
      const int from_lattice = d_from_cyclic_flats(lattice);
      out.push_back({"d_cyclic_flats", std::to_string(expected), std::to_string(from_lattice),
                     expected == from_lattice, {}});
    }
  }
  if (r && delta && n <= 16) {
    const bool expected = oracle_locality(m, *r, *delta);
    const bool actual = has_locality(m, *r, *delta).has_value();
    out.push_back({"locality", expected ? "true" : "false", actual ? "true" : "false", expected == actual, {}});
  }
  return out;
}

}  // namespace lrc::oracle
