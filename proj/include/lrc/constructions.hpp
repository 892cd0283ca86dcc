#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrc/error.hpp"
#include "lrc/matroid.hpp"

namespace lrc {

/// Atom index sets are bitmasks over [m]; builds refuse more atoms than this.
inline constexpr int kMaxAtoms = 20;

/// A declared atom F_i with its rank. Nullity is |F_i| - rank.
struct AtomSpec {
  Subset set;
  int rank = 0;

  int nullity() const { return set.size() - rank; }
  friend bool operator==(const AtomSpec&, const AtomSpec&) = default;
};

/// One failed condition of a builder's input. `index_set` and `j` name the
/// atoms involved when the condition quantifies over them (-1/empty if not).
struct ConditionViolation {
  std::string condition;
  std::string detail;
  std::uint32_t index_set = 0;
  int j = -1;
};

/// Raised with code ConditionViolated; carries every failed condition.
class ConditionError : public Error {
 public:
  explicit ConditionError(std::vector<ConditionViolation> violations);
  const std::vector<ConditionViolation>& violations() const { return violations_; }

 private:
  std::vector<ConditionViolation> violations_;
};

/// A matroid built from atoms, together with the data that defined it.
struct AtomMatroid {
  Matroid matroid;
  std::vector<AtomSpec> atoms;
  int k = 0;
  /// Index sets J with F_J in Z_{<k}, ascending by mask.
  std::vector<std::uint32_t> below_k;
};

/// rho'(F_I) = |F_I| - sum of eta(F_i) over I.
int reduced_rank(const std::vector<AtomSpec>& atoms, std::uint32_t index_set);
Subset atom_union(const std::vector<AtomSpec>& atoms, std::uint32_t index_set);

/// Index sets J with rho'(F_I) < k for every I inside J.
std::vector<std::uint32_t> below_k_index_sets(const std::vector<AtomSpec>& atoms, int k);

/// Conditions (i)-(v) for building from atoms on ground set {0..n-1}, plus
/// "atom-rank" (rho(F_i) < k unless F_i = E with rank k) and, if all of
/// those hold, "lattice" when Z_{<k} u {E} fails the cyclic-flat axioms.
/// Empty when all hold.
std::vector<ConditionViolation> construction1_violations(int n, const std::vector<AtomSpec>& atoms, int k);

/// Cyclic flats Z_{<k} u {E} with rho(F_J) = rho'(F_J) and rho(E) = k.
/// Throws ConditionError listing every violated condition.
AtomMatroid construction1(int n, std::vector<AtomSpec> atoms, int k);

/// Conditions (i)-(iv) of the restricted-intersection subclass: 0 < rho < |F|,
/// F_[m] = E, k <= |E| - sum eta, |F_{[m]\j} n F_j| < rho(F_j), plus
/// "atom-rank" (rho(F_i) < k unless F_i = E with rank k).
std::vector<ConditionViolation> theorem9_violations(int n, const std::vector<AtomSpec>& atoms, int k);

/// Validates the subclass conditions and builds through construction1.
AtomMatroid theorem9(int n, std::vector<AtomSpec> atoms, int k);

/// Parameter values predicted for an atom matroid: n = |E|, k, d = n-k+1 -
/// max sum eta over Z_{<k}, delta-1 = min eta, r = max rho.
struct AtomFormulaParams {
  int n = 0;
  int k = 0;
  int d = 0;
  int r = 0;
  int delta = 0;
};
AtomFormulaParams atom_formula_params(const AtomMatroid& am);

struct GraphEdge {
  int u = 0;
  int v = 0;
  int gamma = 0;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Vertices 0..m-1 stand for atoms; an edge {u,v} with weight gamma means the
/// atoms share gamma elements.
struct ConstructionGraph {
  int m = 0;
  std::vector<GraphEdge> edges;
  std::vector<int> alpha;
  std::vector<int> beta;
  int k = 0;
  int r = 0;
  int delta = 0;

  friend bool operator==(const ConstructionGraph&, const ConstructionGraph&) = default;
};

/// Conditions (i)-(vi) on the graph plus basic shape checks (0 < r < k,
/// delta >= 2, edges well formed).
std::vector<ConditionViolation> graph_violations(const ConstructionGraph& g);

/// n = (r+delta-1)m - sum alpha + sum beta - sum gamma.
int graph_n_formula(const ConstructionGraph& g);
/// d = n-k+1 - max over V_{<k} of ((delta-1)|I| + sum beta over I).
int graph_d_formula(const ConstructionGraph& g);

/// Atom i gets rank r - alpha(i) and size r - alpha(i) + delta - 1 + beta(i).
/// Edge blocks are allocated first (edges sorted by endpoints), then each
/// atom's private elements in atom order.
std::vector<AtomSpec> graph_atoms(const ConstructionGraph& g);

/// Builds the atoms, delegates to theorem9 and checks the predicted n and d
/// against the built matroid (std::logic_error on mismatch).
AtomMatroid graph_construction(const ConstructionGraph& g);

/// Shared-core layout: m = ceil(n/(r+delta-1)) atoms of size r+delta-1 and
/// rank r; a core X of a elements lies in atoms 1..ceil(b/a), atom
/// ceil(b/a)+1 holds b - (ceil(b/a)-1)a of it, the rest are disjoint.
/// Throws PreconditionFailed naming the first violated inequality.
AtomMatroid theorem11_construction(int n, int k, int r, int delta);

/// Optimality test for atom matroids: every union of ceil(k/r) atoms has at
/// least ceil(k/r)(r+delta-1) - a elements, and every atom has nullity delta-1.
bool is_optimal_theorem9(const AtomMatroid& am);

}  // namespace lrc
