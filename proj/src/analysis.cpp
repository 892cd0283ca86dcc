#include "lrc/analysis.hpp"

#include <algorithm>

#include "lrc/error.hpp"

namespace lrc {
namespace {

std::string tuple_text(const ParamTuple& p) {
  return "(n,k,r,delta)=(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," +
         std::to_string(p.r) + "," + std::to_string(p.delta) + ")";
}

// Smallest |X| with X inside `within` and rho(within \ X) < rho(within).
int min_rank_drop(const Matroid& m, Subset within, int full_rank) {
  for (int s = 1; s <= within.size(); ++s) {
    bool found = false;
    for_each_subset_of_size(within, s, [&](Subset x) {
      if (m.rank(within - x) < full_rank) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return s;
  }
  return within.size() + 1;  // unreachable when full_rank > 0
}

// Subcollections of `sets` (by index) of exactly `size` members.
template <typename Fn>
void for_each_index_combination(int total, int size, Fn&& fn) {
  if (size > total || size < 1) return;
  std::vector<int> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    fn(pick);
    int i = size - 1;
    while (i >= 0 && pick[i] == total - size + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

bool has_nontrivial_union(const std::vector<Subset>& sets) {
  for (std::size_t l = 0; l < sets.size(); ++l) {
    Subset others;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (i != l) others |= sets[i];
    }
    if (sets[l].is_subset_of(others)) return false;
  }
  return true;
}

void fail(ConditionResult& c, std::string detail, std::vector<Subset> witnesses) {
  if (!c.ok) return;  // keep the first witness
  c.ok = false;
  c.detail = std::move(detail);
  c.witnesses = std::move(witnesses);
}

}  // namespace

std::optional<std::string> param_violation(const ParamTuple& p) {
  if (p.n < 1) return "n must be at least 1";
  if (p.k < 1) return "k must be at least 1";
  if (p.r < 1 || p.r > p.k) return "need 1 <= r <= k";
  if (p.delta < 2) return "delta must be at least 2";
  if (p.k > p.n - ceil_div(p.k, p.r) * (p.delta - 1)) {
    return "k > n - ceil(k/r)(delta-1) for " + tuple_text(p);
  }
  return std::nullopt;
}

bool validate_params(int n, int k, int r, int delta) {
  return !param_violation({n, k, r, delta}).has_value();
}

int singleton_bound(int n, int k, int r, int delta) {
  if (n < 1 || k < 1 || r < 1 || delta < 2 || k > n) {
    throw Error(ErrorCode::kBadParams, "singleton bound needs n,k,r >= 1, delta >= 2, k <= n; got " +
                                           tuple_text({n, k, r, delta}));
  }
  return n - k + 1 - (ceil_div(k, r) - 1) * (delta - 1);
}

BasicParams params_from_matroid(const Matroid& m) {
  const int k = m.rank();
  if (k == 0) throw Error(ErrorCode::kRankZero, "the matroid has rank 0");
  return {m.size(), k, min_rank_drop(m, m.ground(), k)};
}

int d_from_cyclic_flats(const CyclicFlatLattice& lattice) {
  const auto top = lattice.top();
  const int n = lattice.ground_size();
  if (!top || top->set != Subset::full(n)) {
    throw Error(ErrorCode::kTopNotE, "the greatest cyclic flat is not the ground set");
  }
  if (top->rank == 0) throw Error(ErrorCode::kRankZero, "the matroid has rank 0");
  int max_eta = 0;
  for (const auto& z : lattice.coatoms()) max_eta = std::max(max_eta, z.set.size() - z.rank);
  return n - top->rank + 1 - max_eta;
}

std::optional<int> restricted_distance(const Matroid& m, Subset s) {
  const int rs = m.rank(s);
  if (rs == 0) return std::nullopt;
  return min_rank_drop(m, s, rs);
}

bool is_locality_set(const Matroid& m, Subset s, int r, int delta) {
  if (s.empty() || s.size() > r + delta - 1) return false;
  if (!m.is_cyclic(s)) return false;
  const auto d = restricted_distance(m, s);
  return !d || *d >= delta;
}

std::optional<LocalityCover> has_locality(const Matroid& m, int r, int delta) {
  if (r < 1 || delta < 2) throw Error(ErrorCode::kBadParams, "need r >= 1 and delta >= 2");
  LocalityCover cover{r, delta, {}};
  const int limit = r + delta - 1;
  for (int x = 0; x < m.size(); ++x) {
    const Subset rest = m.ground().without(x);
    std::optional<Subset> chosen;
    for (int s = 1; s <= limit && !chosen; ++s) {
      // Adding x to each (s-1)-subset keeps lexicographic order.
      for_each_subset_of_size(rest, s - 1, [&](Subset t) {
        const Subset candidate = t.with(x);
        if (is_locality_set(m, candidate, r, delta)) {
          chosen = candidate;
          return false;
        }
        return true;
      });
    }
    if (!chosen) return std::nullopt;
    cover.sets.push_back(*chosen);
  }
  return cover;
}

void require_valid_cover(const Matroid& m, const LocalityCover& cover) {
  if (static_cast<int>(cover.sets.size()) != m.size()) {
    throw Error(ErrorCode::kPreconditionFailed, "cover must hold one set per element");
  }
  for (int x = 0; x < m.size(); ++x) {
    const Subset s = cover.sets[x];
    if (!s.contains(x)) {
      throw Error(ErrorCode::kPreconditionFailed,
                  "S_" + std::to_string(x + 1) + " = " + s.to_string_one_based() + " misses its element");
    }
    if (!is_locality_set(m, s, cover.r, cover.delta)) {
      throw Error(ErrorCode::kPreconditionFailed,
                  "S_" + std::to_string(x + 1) + " = " + s.to_string_one_based() + " is not a locality set");
    }
  }
}

bool achieves_bound(const Matroid& m, int r, int delta) {
  if (!has_locality(m, r, delta)) {
    throw Error(ErrorCode::kNoLocality, "the matroid has no (" + std::to_string(r) + "," +
                                            std::to_string(delta) + ") locality");
  }
  const auto p = params_from_matroid(m);
  return p.d == singleton_bound(p.n, p.k, r, delta);
}

bool StructureReport::ok() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.ok; });
}

const ConditionResult* StructureReport::first_failure() const {
  for (const auto& c : conditions) {
    if (!c.ok) return &c;
  }
  return nullptr;
}

StructureReport check_structure_theorem(const Matroid& m, const LocalityCover& cover) {
  const int n = m.size();
  const int k = m.rank();
  const int r = cover.r;
  const int delta = cover.delta;
  if (r >= k) throw Error(ErrorCode::kPreconditionFailed, "the structure conditions need r < k");
  require_valid_cover(m, cover);
  const int big_k = ceil_div(k, r);
  const Subset ground = m.ground();

  ConditionResult c_i{"i", true, "", {}};
  ConditionResult c_iia{"ii.a", true, "", {}};
  ConditionResult c_iib{"ii.b", true, "", {}};
  ConditionResult c_iiic{"iii.c", true, "", {}};
  ConditionResult c_iiid{"iii.d", true, "", {}};
  ConditionResult c_iiie{"iii.e", true, "", {}};
  ConditionResult c_iiif{"iii.f", true, "", {}};

  const Subset loops = m.closure(Subset());
  if (!loops.empty()) fail(c_i, "the least cyclic flat is nonempty", {loops});

  std::vector<Subset> distinct;
  for (int x = 0; x < n; ++x) {
    const Subset s = cover.sets[x];
    if (m.nullity(s) != delta - 1) {
      fail(c_iia, "eta(S_" + std::to_string(x + 1) + ") = " + std::to_string(m.nullity(s)) +
                      " but delta-1 = " + std::to_string(delta - 1),
           {s});
    }
    bool atom_like = m.is_flat(s);  // s is cyclic already
    Subset inner_witness;
    if (atom_like) {
      for_each_submask(s, [&](Subset z) {
        if (z.empty() || z == s || !atom_like) return;
        if (m.is_cyclic(z) && m.is_flat(z)) {
          atom_like = false;
          inner_witness = z;
        }
      });
      if (!atom_like) {
        fail(c_iib, "S_" + std::to_string(x + 1) + " contains the cyclic flat " +
                        inner_witness.to_string_one_based(),
             {s, inner_witness});
      }
    } else {
      fail(c_iib, "S_" + std::to_string(x + 1) + " = " + s.to_string_one_based() + " is not a flat",
           {s, m.closure(s)});
    }
    if (m.is_flat(s)) distinct.push_back(s);
  }
  canonicalize(distinct);

  StructureReport report;
  const int total = static_cast<int>(distinct.size());
  for (int j = 1; j <= std::min(big_k, total); ++j) {
    for_each_index_combination(total, j, [&](const std::vector<int>& pick) {
      std::vector<Subset> sets;
      Subset uni;
      for (int i : pick) {
        sets.push_back(distinct[i]);
        uni |= distinct[i];
      }
      if (!has_nontrivial_union(sets)) return;
      ++report.collections_checked;
      const Subset join = m.closure(uni);
      const std::string label = "j=" + std::to_string(j);
      if (j < big_k) {
        if (m.nullity(join) != j * (delta - 1)) {
          fail(c_iiic, label + ": eta(join) = " + std::to_string(m.nullity(join)) + ", expected " +
                           std::to_string(j * (delta - 1)),
               sets);
        }
        if (join != uni) fail(c_iiid, label + ": join differs from the union", sets);
        if (m.rank(join) != uni.size() - j * (delta - 1)) {
          fail(c_iiie, label + ": rho(join) = " + std::to_string(m.rank(join)) + ", expected " +
                           std::to_string(uni.size() - j * (delta - 1)),
               sets);
        }
      } else {
        if (m.nullity(join) != n - k || n - k < big_k * (delta - 1)) {
          fail(c_iiic, label + ": eta(join) = " + std::to_string(m.nullity(join)) + ", expected n-k = " +
                           std::to_string(n - k) + " >= " + std::to_string(big_k * (delta - 1)),
               sets);
        }
        if (join != ground) fail(c_iiid, label + ": join is not E", sets);
        if (m.rank(join) != k) {
          fail(c_iiie, label + ": rho(join) = " + std::to_string(m.rank(join)) + ", expected k", sets);
        }
      }
      for (std::size_t l = 0; l < sets.size(); ++l) {
        Subset others;
        for (std::size_t i = 0; i < sets.size(); ++i) {
          if (i != l) others |= sets[i];
        }
        if ((sets[l] & others).size() > sets[l].size() - delta) {
          fail(c_iiif, label + ": " + sets[l].to_string_one_based() + " overlaps the others in " +
                           std::to_string((sets[l] & others).size()) + " elements",
               sets);
        }
      }
    });
  }

  report.conditions = {c_i, c_iia, c_iib, c_iiic, c_iiid, c_iiie, c_iiif};
  return report;
}

FlatChain find_locality_chain(const Matroid& m, const LocalityCover& cover) {
  require_valid_cover(m, cover);
  FlatChain chain{cover.r, cover.delta, {}, {}};
  Subset y = m.closure(Subset());
  chain.flats.push_back(y);
  while (y != m.ground()) {
    auto next = std::find_if(cover.sets.begin(), cover.sets.end(),
                             [&](Subset s) { return !s.is_subset_of(y); });
    if (next == cover.sets.end()) {
      throw Error(ErrorCode::kChainStalled, "no cover set extends " + y.to_string_one_based());
    }
    y = m.closure(y | *next);
    chain.locality_sets.push_back(*next);
    chain.flats.push_back(y);
  }
  return chain;
}

ChainInequalities check_chain_inequalities(const Matroid& m, const FlatChain& chain) {
  const auto p = params_from_matroid(m);
  ChainInequalities out;
  out.d = p.d;
  out.length = chain.length();
  out.min_length = ceil_div(p.k, chain.r);
  const Subset penultimate =
      chain.flats.size() >= 2 ? chain.flats[chain.flats.size() - 2] : chain.flats.front();
  out.distance_bound = p.n - p.k + 1 - m.nullity(penultimate);
  for (std::size_t j = 1; j < chain.flats.size(); ++j) {
    const Subset prev = chain.flats[j - 1];
    const Subset cur = chain.flats[j];
    if (m.rank(cur) - m.rank(prev) > chain.r) out.steps_ok = false;
    if (m.nullity(cur) - m.nullity(prev) < chain.delta - 1) out.steps_ok = false;
  }
  return out;
}

}  // namespace lrc
