#pragma once

// Shared instances and independent reference computations for the tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "lrc/analysis.hpp"
#include "lrc/bounds.hpp"
#include "lrc/code.hpp"
#include "lrc/constructions.hpp"
#include "lrc/matroid.hpp"

namespace fixtures {

using lrc::AtomSpec;
using lrc::Subset;

/// F1 = {0,1,2}, F2 = {3,4,5}, both rank 2, k = 4: the (6,4,2,2,2) matroid.
inline lrc::AtomMatroid two_atom() {
  return lrc::theorem9(6, {{Subset::of({0, 1, 2}), 2}, {Subset::of({3, 4, 5}), 2}}, 4);
}

/// The lattice {(0,0), (F1,2), (F2,2), (E,4)} declared directly.
inline lrc::CyclicFlatLattice two_atom_lattice() {
  return lrc::CyclicFlatLattice(
      6, {{Subset{}, 0}, {Subset::of({0, 1, 2}), 2}, {Subset::of({3, 4, 5}), 2}, {Subset::full(6), 4}});
}

/// Spread-nullity layout for (n,k,r,delta) = (7,4,2,2): atoms of size 4 and 3.
inline lrc::AtomMatroid seven_four() { return lrc::theorem14_construction(7, 4, 2, 2); }

/// Rank over GF(2) of the columns in `cols`, by Gaussian elimination on bit rows.
inline int gf2_column_rank(const std::vector<std::vector<int>>& generator, Subset cols) {
  std::vector<std::uint64_t> vectors;
  for (int c : cols.elements()) {
    std::uint64_t v = 0;
    for (std::size_t row = 0; row < generator.size(); ++row) {
      if (generator[row][c] & 1) v |= std::uint64_t{1} << row;
    }
    vectors.push_back(v);
  }
  int rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    auto pivot = std::find_if(vectors.begin() + rank, vectors.end(),
                              [&](std::uint64_t v) { return (v >> bit) & 1U; });
    if (pivot == vectors.end()) continue;
    std::iter_swap(vectors.begin() + rank, pivot);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (static_cast<int>(i) != rank && ((vectors[i] >> bit) & 1U)) vectors[i] ^= vectors[rank];
    }
    ++rank;
  }
  return rank;
}

/// A k x n binary generator of full row rank drawn from `rng`.
inline std::vector<std::vector<int>> random_gf2_generator(int k, int n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  while (true) {
    std::vector<std::vector<int>> g(k, std::vector<int>(n));
    for (auto& row : g) {
      for (auto& x : row) x = coin(rng) ? 1 : 0;
    }
    if (gf2_column_rank(g, Subset::full(n)) == k) return g;
  }
}

/// Every valid (n,k,r,delta) with n in [lo, hi].
struct Tuple {
  int n, k, r, delta;
};
inline std::vector<Tuple> valid_tuples(int lo, int hi) {
  std::vector<Tuple> out;
  for (int n = lo; n <= hi; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int r = 1; r <= k; ++r) {
        for (int delta = 2; delta <= n; ++delta) {
          if (lrc::validate_params(n, k, r, delta)) out.push_back({n, k, r, delta});
        }
      }
    }
  }
  return out;
}

/// Tuples where the shared-core layout applies.
inline bool shared_core_applies(const Tuple& t) {
  const lrc::ParamTuple p{t.n, t.k, t.r, t.delta};
  return t.r < t.k && lrc::ceil_div(t.k, t.r) == 2 && p.b() > p.a() && p.a() >= 1 &&
         lrc::ceil_div(t.n, p.locality_size()) >= lrc::ceil_div(p.b(), p.a()) + 1;
}

}  // namespace fixtures
