#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lrc/subset.hpp"

namespace lrc {

/// Rank and independent-set tables hold 2^n entries; beyond this they are refused.
inline constexpr int kMaxTableGroundSize = 24;

/// Rank of every subset, indexed by the subset's bitmask.
struct RankTable {
  int n = 0;
  std::vector<int> ranks;

  int operator[](Subset x) const { return ranks[x.bits()]; }
};

struct CyclicFlat {
  Subset set;
  int rank = 0;

  friend bool operator==(const CyclicFlat&, const CyclicFlat&) = default;
};

/// A family of (set, rank) pairs intended to be the cyclic flats of a matroid.
/// Flats are kept in canonical (lexicographic) order. No axioms are enforced
/// here; see check_cyclic_flat_axioms.
class CyclicFlatLattice {
 public:
  CyclicFlatLattice() = default;
  CyclicFlatLattice(int n, std::vector<CyclicFlat> flats);

  int ground_size() const { return n_; }
  const std::vector<CyclicFlat>& flats() const { return flats_; }
  std::size_t size() const { return flats_.size(); }

  bool contains(Subset z) const;
  std::optional<int> rank_of(Subset z) const;

  /// Least and greatest members under inclusion, if they exist.
  std::optional<CyclicFlat> bottom() const;
  std::optional<CyclicFlat> top() const;

  /// Order-theoretic join/meet inside the family (least upper / greatest lower
  /// bound among members). Empty when the bound is missing or not unique.
  std::optional<Subset> order_join(Subset x, Subset y) const;
  std::optional<Subset> order_meet(Subset x, Subset y) const;

  /// Maximal members strictly below the top.
  std::vector<CyclicFlat> coatoms() const;
  /// Minimal members strictly above the bottom.
  std::vector<CyclicFlat> atoms() const;

  friend bool operator==(const CyclicFlatLattice&, const CyclicFlatLattice&) = default;

 private:
  int n_ = 0;
  std::vector<CyclicFlat> flats_;
};

enum class Representation { kIndependentSets, kRankTable, kCyclicFlats };

std::string_view to_string(Representation repr);

/// Outcome of an axiom check. When `ok` is false, `axiom` names the first
/// violated condition and `witnesses` holds the sets that exhibit it.
struct AxiomReport {
  bool ok = true;
  std::string axiom;
  std::string message;
  std::vector<Subset> witnesses;

  explicit operator bool() const { return ok; }
};

AxiomReport check_independence_axioms(int n, const SubsetFamily& family);
/// Full check of rank axioms (i)-(iii). Semimodularity is scanned over all
/// pairs for n <= 12 and through the equivalent local form above that.
AxiomReport check_rank_axioms(const RankTable& table);
/// Local form: unit increase, and r(X+a) + r(X+b) >= r(X+a+b) + r(X).
/// Equivalent to check_rank_axioms and O(2^n n^2).
AxiomReport check_rank_axioms_local(const RankTable& table);
AxiomReport check_cyclic_flat_axioms(const CyclicFlatLattice& lattice);

/// A matroid on {0, ..., n-1}, held in one of three representations. Values
/// are immutable and validated on construction; copies share storage.
class Matroid {
 public:
  using Storage = std::variant<SubsetFamily, RankTable, CyclicFlatLattice>;

  /// Each factory validates its input and throws Error(kInvalidMatroid) with
  /// the violated axiom when it fails.
  static Matroid from_independent_sets(int n, SubsetFamily family);
  static Matroid from_rank_table(RankTable table);
  static Matroid from_cyclic_flats(CyclicFlatLattice lattice);
  static Matroid uniform(int n, int k);
  static Matroid free_matroid(int n) { return uniform(n, n); }

  int size() const { return n_; }
  Subset ground() const { return Subset::full(n_); }
  Representation representation() const;
  const Storage& storage() const { return *storage_; }

  int rank(Subset x) const;
  int rank() const { return rank(ground()); }
  int nullity(Subset x) const { return x.size() - rank(x); }
  bool is_independent(Subset x) const { return rank(x) == x.size(); }
  Subset closure(Subset x) const;
  bool is_flat(Subset x) const { return closure(x) == x; }
  bool is_cyclic(Subset x) const;

  RankTable rank_table() const;
  SubsetFamily independent_sets() const;
  /// The stored lattice for cyclic-flat matroids, otherwise enumerated.
  CyclicFlatLattice cyclic_flat_lattice() const;

  /// Same matroid in another representation.
  Matroid as(Representation repr) const;

  Matroid dual() const;
  /// M|X relabelled onto {0, ..., |X|-1} preserving element order.
  Matroid restriction(Subset x) const;

 private:
  Matroid(int n, std::shared_ptr<const Storage> storage) : n_(n), storage_(std::move(storage)) {}

  int n_ = 0;
  std::shared_ptr<const Storage> storage_;
};

SubsetFamily circuits(const Matroid& m);
SubsetFamily cyclic_sets(const Matroid& m);
SubsetFamily flats(const Matroid& m);
CyclicFlatLattice cyclic_flats(const Matroid& m);

/// Meet and join in the lattice of cyclic flats of m. Both arguments must be
/// cyclic flats of m, otherwise Error(kNotInLattice).
Subset lattice_meet(const Matroid& m, Subset x, Subset y);
Subset lattice_join(const Matroid& m, Subset x, Subset y);

/// Union of the circuits of m contained in x.
Subset cyclic_core(const Matroid& m, Subset x);

/// True when both matroids have the same ground size and rank function.
bool same_rank_function(const Matroid& a, const Matroid& b);

}  // namespace lrc
