#include "lrc/matroid.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "lrc/error.hpp"

namespace lrc {
namespace {

void require_table_size(int n, const char* what) {
  if (n < 0 || n > kMaxTableGroundSize) {
    throw Error(ErrorCode::kTooLarge, std::string(what) + " needs n <= " +
                                          std::to_string(kMaxTableGroundSize) + ", got " +
                                          std::to_string(n));
  }
}

bool flat_less(const CyclicFlat& a, const CyclicFlat& b) {
  if (a.set != b.set) return lex_less(a.set, b.set);
  return a.rank < b.rank;
}

AxiomReport fail(std::string axiom, std::string message, std::vector<Subset> witnesses) {
  return AxiomReport{false, std::move(axiom), std::move(message), std::move(witnesses)};
}

// Rank of a table-backed or family-backed matroid, and the cyclic-flat extension
// rho(X) = min over Z of rho(Z) + |X \ Z|.
struct RankVisitor {
  Subset x;
  int operator()(const SubsetFamily& family) const {
    int best = 0;
    for (Subset y : family) {
      if (y.size() > best && y.is_subset_of(x)) best = y.size();
    }
    return best;
  }
  int operator()(const RankTable& table) const { return table[x]; }
  int operator()(const CyclicFlatLattice& lattice) const {
    int best = std::numeric_limits<int>::max();
    for (const auto& z : lattice.flats()) best = std::min(best, z.rank + (x - z.set).size());
    return best;
  }
};

}  // namespace

std::string_view to_string(Representation repr) {
  switch (repr) {
    case Representation::kIndependentSets: return "independent_sets";
    case Representation::kRankTable: return "rank_table";
    case Representation::kCyclicFlats: return "cyclic_flats";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// CyclicFlatLattice

CyclicFlatLattice::CyclicFlatLattice(int n, std::vector<CyclicFlat> flats)
    : n_(n), flats_(std::move(flats)) {
  if (n < 0 || n > kMaxGroundSize) {
    throw Error(ErrorCode::kTooLarge, "ground set size " + std::to_string(n) + " outside 0..64");
  }
  std::sort(flats_.begin(), flats_.end(), flat_less);
}

bool CyclicFlatLattice::contains(Subset z) const { return rank_of(z).has_value(); }

std::optional<int> CyclicFlatLattice::rank_of(Subset z) const {
  for (const auto& f : flats_) {
    if (f.set == z) return f.rank;
  }
  return std::nullopt;
}

std::optional<CyclicFlat> CyclicFlatLattice::bottom() const {
  if (flats_.empty()) return std::nullopt;
  const auto smallest = std::min_element(flats_.begin(), flats_.end(), [](auto& a, auto& b) {
    return a.set.size() < b.set.size();
  });
  for (const auto& f : flats_) {
    if (!smallest->set.is_subset_of(f.set)) return std::nullopt;
  }
  return *smallest;
}

std::optional<CyclicFlat> CyclicFlatLattice::top() const {
  if (flats_.empty()) return std::nullopt;
  const auto largest = std::max_element(flats_.begin(), flats_.end(), [](auto& a, auto& b) {
    return a.set.size() < b.set.size();
  });
  for (const auto& f : flats_) {
    if (!f.set.is_subset_of(largest->set)) return std::nullopt;
  }
  return *largest;
}

std::optional<Subset> CyclicFlatLattice::order_join(Subset x, Subset y) const {
  const Subset u = x | y;
  const CyclicFlat* best = nullptr;
  for (const auto& f : flats_) {
    if (u.is_subset_of(f.set) && (best == nullptr || f.set.size() < best->set.size())) best = &f;
  }
  if (best == nullptr) return std::nullopt;
  for (const auto& f : flats_) {
    if (u.is_subset_of(f.set) && !best->set.is_subset_of(f.set)) return std::nullopt;
  }
  return best->set;
}

std::optional<Subset> CyclicFlatLattice::order_meet(Subset x, Subset y) const {
  const Subset v = x & y;
  const CyclicFlat* best = nullptr;
  for (const auto& f : flats_) {
    if (f.set.is_subset_of(v) && (best == nullptr || f.set.size() > best->set.size())) best = &f;
  }
  if (best == nullptr) return std::nullopt;
  for (const auto& f : flats_) {
    if (f.set.is_subset_of(v) && !f.set.is_subset_of(best->set)) return std::nullopt;
  }
  return best->set;
}

std::vector<CyclicFlat> CyclicFlatLattice::coatoms() const {
  std::vector<CyclicFlat> out;
  const auto t = top();
  if (!t) return out;
  for (const auto& f : flats_) {
    if (f.set == t->set) continue;
    const bool maximal = std::none_of(flats_.begin(), flats_.end(), [&](const CyclicFlat& g) {
      return g.set != t->set && f.set.is_proper_subset_of(g.set);
    });
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<CyclicFlat> CyclicFlatLattice::atoms() const {
  std::vector<CyclicFlat> out;
  const auto b = bottom();
  if (!b) return out;
  for (const auto& f : flats_) {
    if (f.set == b->set) continue;
    const bool minimal = std::none_of(flats_.begin(), flats_.end(), [&](const CyclicFlat& g) {
      return g.set != b->set && g.set.is_proper_subset_of(f.set);
    });
    if (minimal) out.push_back(f);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Axiom checkers

AxiomReport check_independence_axioms(int n, const SubsetFamily& family) {
  require_table_size(n, "independent-set family");
  const Subset ground = Subset::full(n);
  std::unordered_set<std::uint64_t> members;
  for (Subset s : family) {
    if (!s.is_subset_of(ground)) return fail("ground", "member outside the ground set", {s});
    members.insert(s.bits());
  }
  if (!members.contains(0)) return fail("(i)", "the empty set is not independent", {Subset{}});
  // Closure under taking subsets follows from closure under single deletions.
  for (std::uint64_t bits : members) {
    const Subset y(bits);
    for (int e : y.elements()) {
      if (!members.contains(y.without(e).bits())) {
        return fail("(ii)", "subset of an independent set is missing", {y, y.without(e)});
      }
    }
  }
  for (std::uint64_t xb : members) {
    const Subset x(xb);
    for (std::uint64_t yb : members) {
      const Subset y(yb);
      if (x.size() <= y.size()) continue;
      bool augmentable = false;
      for (int e : (x - y).elements()) {
        if (members.contains(y.with(e).bits())) {
          augmentable = true;
          break;
        }
      }
      if (!augmentable) return fail("(iii)", "no element of X augments Y", {x, y});
    }
  }
  return {};
}

namespace {

AxiomReport check_table_shape(const RankTable& table) {
  require_table_size(table.n, "rank table");
  const std::size_t expected = std::size_t{1} << table.n;
  if (table.ranks.size() != expected) {
    throw Error(ErrorCode::kMissingSubset, "rank table has " + std::to_string(table.ranks.size()) +
                                               " entries, expected " + std::to_string(expected));
  }
  for (std::uint64_t b = 0; b < expected; ++b) {
    const Subset x(b);
    if (table[x] < 0 || table[x] > x.size()) {
      return fail("(i)", "rank outside 0..|X|", {x});
    }
  }
  for (std::uint64_t b = 0; b < expected; ++b) {
    const Subset x(b);
    for (int e = 0; e < table.n; ++e) {
      if (x.contains(e)) continue;
      if (table[x.with(e)] < table[x]) return fail("(ii)", "rank decreases", {x, x.with(e)});
    }
  }
  return {};
}

}  // namespace

AxiomReport check_rank_axioms_local(const RankTable& table) {
  if (auto shape = check_table_shape(table); !shape) return shape;
  const int n = table.n;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t b = 0; b < count; ++b) {
    const Subset x(b);
    for (int e = 0; e < n; ++e) {
      if (x.contains(e)) continue;
      if (table[x.with(e)] > table[x] + 1) {
        return fail("(iii)", "rank jumps by more than one", {x, x.with(e)});
      }
      for (int f = e + 1; f < n; ++f) {
        if (x.contains(f)) continue;
        const Subset xe = x.with(e);
        const Subset xf = x.with(f);
        if (table[xe] + table[xf] < table[xe | xf] + table[x]) {
          return fail("(iii)", "semimodular inequality fails", {xe, xf});
        }
      }
    }
  }
  return {};
}

AxiomReport check_rank_axioms(const RankTable& table) {
  if (table.n > 12) return check_rank_axioms_local(table);
  if (auto shape = check_table_shape(table); !shape) return shape;
  const std::uint64_t count = std::uint64_t{1} << table.n;
  for (std::uint64_t xb = 0; xb < count; ++xb) {
    for (std::uint64_t yb = xb + 1; yb < count; ++yb) {
      const Subset x(xb);
      const Subset y(yb);
      if (table[x] + table[y] < table[x | y] + table[x & y]) {
        return fail("(iii)", "semimodular inequality fails", {x, y});
      }
    }
  }
  return {};
}

AxiomReport check_cyclic_flat_axioms(const CyclicFlatLattice& lattice) {
  const Subset ground = Subset::full(lattice.ground_size());
  const auto& flats = lattice.flats();
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (!flats[i].set.is_subset_of(ground)) {
      return fail("ground", "member outside the ground set", {flats[i].set});
    }
    if (i > 0 && flats[i].set == flats[i - 1].set) {
      return fail("(Z0)", "set listed twice", {flats[i].set});
    }
  }
  const auto bottom = lattice.bottom();
  if (!bottom) return fail("(Z0)", "no least element", {});
  if (!lattice.top()) return fail("(Z0)", "no greatest element", {});
  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (std::size_t j = i + 1; j < flats.size(); ++j) {
      const Subset x = flats[i].set;
      const Subset y = flats[j].set;
      if (!lattice.order_join(x, y)) return fail("(Z0)", "pair has no join", {x, y});
      if (!lattice.order_meet(x, y)) return fail("(Z0)", "pair has no meet", {x, y});
    }
  }
  if (bottom->rank != 0) return fail("(Z1)", "least element has nonzero rank", {bottom->set});
  for (const auto& x : flats) {
    for (const auto& y : flats) {
      if (!x.set.is_proper_subset_of(y.set)) continue;
      const int dr = y.rank - x.rank;
      const int ds = y.set.size() - x.set.size();
      if (!(0 < dr && dr < ds)) {
        return fail("(Z2)", "need 0 < rho(Y)-rho(X) < |Y|-|X|", {x.set, y.set});
      }
    }
  }
  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (std::size_t j = i + 1; j < flats.size(); ++j) {
      const auto& x = flats[i];
      const auto& y = flats[j];
      const Subset join = *lattice.order_join(x.set, y.set);
      const Subset meet = *lattice.order_meet(x.set, y.set);
      const int rhs = *lattice.rank_of(join) + *lattice.rank_of(meet) + ((x.set & y.set) - meet).size();
      if (x.rank + y.rank < rhs) {
        return fail("(Z3)", "modular-defect inequality fails", {x.set, y.set});
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Matroid

Matroid Matroid::from_independent_sets(int n, SubsetFamily family) {
  if (auto report = check_independence_axioms(n, family); !report) {
    throw Error(ErrorCode::kInvalidMatroid, "independence axiom " + report.axiom + ": " + report.message);
  }
  canonicalize(family);
  return Matroid(n, std::make_shared<const Storage>(std::move(family)));
}

Matroid Matroid::from_rank_table(RankTable table) {
  if (auto report = check_rank_axioms_local(table); !report) {
    throw Error(ErrorCode::kInvalidMatroid, "rank axiom " + report.axiom + ": " + report.message);
  }
  const int n = table.n;
  return Matroid(n, std::make_shared<const Storage>(std::move(table)));
}

Matroid Matroid::from_cyclic_flats(CyclicFlatLattice lattice) {
  if (auto report = check_cyclic_flat_axioms(lattice); !report) {
    throw Error(ErrorCode::kInvalidMatroid, "cyclic flat axiom " + report.axiom + ": " + report.message);
  }
  const int n = lattice.ground_size();
  return Matroid(n, std::make_shared<const Storage>(std::move(lattice)));
}

Matroid Matroid::uniform(int n, int k) {
  if (n < 0 || n > kMaxGroundSize || k < 0 || k > n) {
    throw Error(ErrorCode::kBadParams, "uniform matroid needs 0 <= k <= n <= 64, got n=" +
                                           std::to_string(n) + " k=" + std::to_string(k));
  }
  const Subset e = Subset::full(n);
  std::vector<CyclicFlat> flats;
  if (k == 0) {
    flats.push_back({e, 0});
  } else if (k == n) {
    flats.push_back({Subset{}, 0});
  } else {
    flats = {{Subset{}, 0}, {e, k}};
  }
  return Matroid(n, std::make_shared<const Storage>(CyclicFlatLattice(n, std::move(flats))));
}

Representation Matroid::representation() const {
  return static_cast<Representation>(storage_->index());
}

int Matroid::rank(Subset x) const { return std::visit(RankVisitor{x}, *storage_); }

Subset Matroid::closure(Subset x) const {
  const int base = rank(x);
  Subset out = x;
  for (int e = 0; e < n_; ++e) {
    if (!x.contains(e) && rank(x.with(e)) == base) out = out.with(e);
  }
  return out;
}

bool Matroid::is_cyclic(Subset x) const {
  const int base = rank(x);
  for (int e : x.elements()) {
    if (rank(x.without(e)) != base) return false;
  }
  return true;
}

RankTable Matroid::rank_table() const {
  if (const auto* table = std::get_if<RankTable>(storage_.get())) return *table;
  require_table_size(n_, "rank table");
  RankTable out{n_, std::vector<int>(std::size_t{1} << n_)};
  for (std::uint64_t b = 0; b < out.ranks.size(); ++b) out.ranks[b] = rank(Subset(b));
  return out;
}

SubsetFamily Matroid::independent_sets() const {
  if (const auto* family = std::get_if<SubsetFamily>(storage_.get())) return *family;
  const RankTable table = rank_table();
  SubsetFamily out;
  for (std::uint64_t b = 0; b < table.ranks.size(); ++b) {
    if (table.ranks[b] == std::popcount(b)) out.push_back(Subset(b));
  }
  canonicalize(out);
  return out;
}

CyclicFlatLattice Matroid::cyclic_flat_lattice() const {
  if (const auto* lattice = std::get_if<CyclicFlatLattice>(storage_.get())) return *lattice;
  const RankTable table = rank_table();
  std::vector<CyclicFlat> out;
  for (std::uint64_t b = 0; b < table.ranks.size(); ++b) {
    const Subset x(b);
    const int r = table[x];
    bool ok = true;
    for (int e = 0; e < n_ && ok; ++e) {
      // Flat: adding any outside element raises rank. Cyclic: removing any
      // inside element keeps it.
      ok = x.contains(e) ? table[x.without(e)] == r : table[x.with(e)] > r;
    }
    if (ok) out.push_back({x, r});
  }
  return CyclicFlatLattice(n_, std::move(out));
}

Matroid Matroid::as(Representation repr) const {
  if (repr == representation()) return *this;
  switch (repr) {
    case Representation::kIndependentSets:
      return Matroid(n_, std::make_shared<const Storage>(independent_sets()));
    case Representation::kRankTable:
      return Matroid(n_, std::make_shared<const Storage>(rank_table()));
    case Representation::kCyclicFlats:
      return Matroid(n_, std::make_shared<const Storage>(cyclic_flat_lattice()));
  }
  return *this;
}

Matroid Matroid::dual() const {
  const Subset e = ground();
  const int full = rank();
  if (const auto* lattice = std::get_if<CyclicFlatLattice>(storage_.get())) {
    // The cyclic flats of the dual are the complements of the cyclic flats.
    std::vector<CyclicFlat> flats;
    for (const auto& z : lattice->flats()) {
      const Subset c = e - z.set;
      flats.push_back({c, z.rank + c.size() - full});
    }
    return Matroid(n_, std::make_shared<const Storage>(CyclicFlatLattice(n_, std::move(flats))));
  }
  const RankTable table = rank_table();
  RankTable out{n_, std::vector<int>(table.ranks.size())};
  for (std::uint64_t b = 0; b < table.ranks.size(); ++b) {
    const Subset x(b);
    out.ranks[b] = table[e - x] + x.size() - full;
  }
  return Matroid(n_, std::make_shared<const Storage>(std::move(out)));
}

Matroid Matroid::restriction(Subset x) const {
  if (!x.is_subset_of(ground())) {
    throw Error(ErrorCode::kBadParams, "restriction set is not inside the ground set");
  }
  const std::vector<int> keep = x.elements();
  const int m = static_cast<int>(keep.size());
  require_table_size(m, "restriction");
  RankTable out{m, std::vector<int>(std::size_t{1} << m)};
  for (std::uint64_t b = 0; b < out.ranks.size(); ++b) {
    std::uint64_t original = 0;
    for (int i = 0; i < m; ++i) {
      if ((b >> i) & 1U) original |= std::uint64_t{1} << keep[i];
    }
    out.ranks[b] = rank(Subset(original));
  }
  return Matroid(m, std::make_shared<const Storage>(std::move(out)));
}

// ---------------------------------------------------------------------------
// Derived families

SubsetFamily circuits(const Matroid& m) {
  const RankTable table = m.rank_table();
  SubsetFamily out;
  for (std::uint64_t b = 1; b < table.ranks.size(); ++b) {
    const Subset x(b);
    if (table[x] != x.size() - 1) continue;
    bool minimal = true;
    for (int e : x.elements()) {
      if (table[x.without(e)] != x.size() - 1) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  canonicalize(out);
  return out;
}

SubsetFamily cyclic_sets(const Matroid& m) {
  const RankTable table = m.rank_table();
  SubsetFamily out;
  for (std::uint64_t b = 0; b < table.ranks.size(); ++b) {
    const Subset x(b);
    bool cyclic = true;
    for (int e : x.elements()) {
      if (table[x.without(e)] != table[x]) {
        cyclic = false;
        break;
      }
    }
    if (cyclic) out.push_back(x);
  }
  canonicalize(out);
  return out;
}

SubsetFamily flats(const Matroid& m) {
  const RankTable table = m.rank_table();
  SubsetFamily out;
  for (std::uint64_t b = 0; b < table.ranks.size(); ++b) {
    const Subset x(b);
    bool flat = true;
    for (int e = 0; e < m.size(); ++e) {
      if (!x.contains(e) && table[x.with(e)] == table[x]) {
        flat = false;
        break;
      }
    }
    if (flat) out.push_back(x);
  }
  canonicalize(out);
  return out;
}

CyclicFlatLattice cyclic_flats(const Matroid& m) { return m.as(Representation::kRankTable).cyclic_flat_lattice(); }

Subset cyclic_core(const Matroid& m, Subset x) {
  const int base = m.rank(x);
  Subset out;
  for (int e : x.elements()) {
    if (m.rank(x.without(e)) == base) out = out.with(e);
  }
  return out;
}

namespace {

void require_cyclic_flat(const Matroid& m, Subset x) {
  if (!x.is_subset_of(m.ground()) || !m.is_flat(x) || !m.is_cyclic(x)) {
    throw Error(ErrorCode::kNotInLattice, x.to_string_one_based() + " is not a cyclic flat");
  }
}

}  // namespace

Subset lattice_meet(const Matroid& m, Subset x, Subset y) {
  require_cyclic_flat(m, x);
  require_cyclic_flat(m, y);
  return cyclic_core(m, x & y);
}

Subset lattice_join(const Matroid& m, Subset x, Subset y) {
  require_cyclic_flat(m, x);
  require_cyclic_flat(m, y);
  return m.closure(x | y);
}

bool same_rank_function(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  require_table_size(a.size(), "rank comparison");
  const std::uint64_t count = std::uint64_t{1} << a.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if (a.rank(Subset(bits)) != b.rank(Subset(bits))) return false;
  }
  return true;
}

}  // namespace lrc
