#include "lrc/constructions.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "lrc/analysis.hpp"

namespace lrc {
namespace {

std::string index_set_text(std::uint32_t mask) {
  return Subset(mask).to_string_one_based();
}

std::string atom_name(int i) { return "F_" + std::to_string(i + 1); }

std::string join_violations(const std::vector<ConditionViolation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += "(" + v.condition + ") " + v.detail;
  }
  return out;
}

void check_atom_count(const std::vector<AtomSpec>& atoms) {
  if (atoms.size() > static_cast<std::size_t>(kMaxAtoms)) {
    throw Error(ErrorCode::kTooLarge, "more than " + std::to_string(kMaxAtoms) + " atoms");
  }
}

std::uint32_t full_mask(std::size_t m) { return (std::uint32_t{1} << m) - 1; }

// rho' of every index set, built up from the lowest member.
std::vector<int> all_reduced_ranks(const std::vector<AtomSpec>& atoms) {
  const std::size_t count = std::size_t{1} << atoms.size();
  std::vector<Subset> unions(count);
  std::vector<int> eta_sums(count, 0);
  std::vector<int> out(count, 0);
  for (std::size_t mask = 1; mask < count; ++mask) {
    const int low = std::countr_zero(mask);
    const std::size_t rest = mask & (mask - 1);
    unions[mask] = unions[rest] | atoms[low].set;
    eta_sums[mask] = eta_sums[rest] + atoms[low].nullity();
    out[mask] = unions[mask].size() - eta_sums[mask];
  }
  return out;
}

std::vector<char> below_k_flags(const std::vector<int>& reduced, std::size_t m, int k) {
  const std::size_t count = std::size_t{1} << m;
  std::vector<char> good(count, 0);
  for (std::size_t mask = 0; mask < count; ++mask) {
    bool ok = reduced[mask] < k;
    for (std::uint64_t b = mask; ok && b != 0; b &= b - 1) {
      ok = good[mask & ~(std::size_t{1} << std::countr_zero(b))] != 0;
    }
    good[mask] = ok ? 1 : 0;
  }
  return good;
}

}  // namespace

ConditionError::ConditionError(std::vector<ConditionViolation> violations)
    : Error(ErrorCode::kConditionViolated, join_violations(violations)),
      violations_(std::move(violations)) {}

Subset atom_union(const std::vector<AtomSpec>& atoms, std::uint32_t index_set) {
  Subset out;
  for (std::uint64_t b = index_set; b != 0; b &= b - 1) out |= atoms[std::countr_zero(b)].set;
  return out;
}

int reduced_rank(const std::vector<AtomSpec>& atoms, std::uint32_t index_set) {
  int eta = 0;
  for (std::uint64_t b = index_set; b != 0; b &= b - 1) eta += atoms[std::countr_zero(b)].nullity();
  return atom_union(atoms, index_set).size() - eta;
}

std::vector<std::uint32_t> below_k_index_sets(const std::vector<AtomSpec>& atoms, int k) {
  check_atom_count(atoms);
  const auto good = below_k_flags(all_reduced_ranks(atoms), atoms.size(), k);
  std::vector<std::uint32_t> out;
  for (std::size_t mask = 0; mask < good.size(); ++mask) {
    if (good[mask]) out.push_back(static_cast<std::uint32_t>(mask));
  }
  return out;
}

namespace {

// The formulas treat every F_i as a cyclic flat of the result with its declared
// rank: a member of Z_{<k}, or E itself with rank k. (i)-(v) and the subclass
// conditions do not imply this.
void check_atoms_in_lattice(int n, const std::vector<AtomSpec>& atoms, int k, std::vector<ConditionViolation>& out) {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const bool is_top = atoms[i].set == Subset::full(n) && atoms[i].rank == k;
    if (k >= 1 && atoms[i].rank >= k && !is_top) {
      out.push_back({"atom-rank", atom_name(i) + " has rank " + std::to_string(atoms[i].rank) + " >= k = " +
                                      std::to_string(k) + " but is not E",
                     0, static_cast<int>(i)});
    }
  }
}

CyclicFlatLattice result_lattice(int n, const std::vector<AtomSpec>& atoms, int k) {
  std::vector<CyclicFlat> flats;
  for (std::uint32_t mask : below_k_index_sets(atoms, k)) {
    flats.push_back({atom_union(atoms, mask), reduced_rank(atoms, mask)});
  }
  flats.push_back({Subset::full(n), k});
  return CyclicFlatLattice(n, std::move(flats));
}

}  // namespace

std::vector<ConditionViolation> construction1_violations(int n, const std::vector<AtomSpec>& atoms,
                                                         int k) {
  check_atom_count(atoms);
  std::vector<ConditionViolation> out;
  const std::size_t m = atoms.size();
  if (n < 0 || n > kMaxGroundSize) throw Error(ErrorCode::kTooLarge, "ground set outside 0..64");
  if (k < 1) out.push_back({"k", "k must be a positive integer", 0, -1});
  if (m == 0) {
    out.push_back({"i", "no atoms given", 0, -1});
    return out;
  }

  const std::uint32_t all = full_mask(m);
  const Subset ground = Subset::full(n);
  // (i) nontrivial union with F_[m] = E
  if (atom_union(atoms, all) != ground) {
    out.push_back({"i", "the atoms' union " + atom_union(atoms, all).to_string_one_based() +
                            " is not E = {1.." + std::to_string(n) + "}",
                   all, -1});
  }
  for (std::size_t j = 0; j < m; ++j) {
    const std::uint32_t others = all & ~(std::uint32_t{1} << j);
    if (atoms[j].set.is_subset_of(atom_union(atoms, others))) {
      out.push_back({"i", atom_name(j) + " lies inside the union of the other atoms", others,
                     static_cast<int>(j)});
    }
  }
  // (ii) 0 < rho(F_i) < |F_i|
  for (std::size_t i = 0; i < m; ++i) {
    if (atoms[i].rank <= 0 || atoms[i].rank >= atoms[i].set.size()) {
      out.push_back({"ii", atom_name(i) + " has rank " + std::to_string(atoms[i].rank) +
                               " and size " + std::to_string(atoms[i].set.size()),
                     0, static_cast<int>(i)});
    }
  }

  check_atoms_in_lattice(n, atoms, k, out);

  const auto reduced = all_reduced_ranks(atoms);
  // (iii) some F_I reaches k
  if (std::none_of(reduced.begin(), reduced.end(), [&](int v) { return v >= k; })) {
    out.push_back({"iii", "no union of atoms has |F_I| - sum eta >= k", 0, -1});
  }

  const auto good = below_k_flags(reduced, m, k);
  std::vector<std::uint32_t> below;
  for (std::size_t mask = 0; mask < good.size(); ++mask) {
    if (good[mask]) below.push_back(static_cast<std::uint32_t>(mask));
  }
  // (iv) |F_I n F_j| < rho(F_j) for F_I in Z_{<k}, j outside I
  for (std::uint32_t mask : below) {
    const Subset fi = atom_union(atoms, mask);
    for (std::size_t j = 0; j < m; ++j) {
      if (mask >> j & 1U) continue;
      if ((fi & atoms[j].set).size() >= atoms[j].rank) {
        out.push_back({"iv", "|F_I n " + atom_name(j) + "| = " + std::to_string((fi & atoms[j].set).size()) +
                                 " >= rho = " + std::to_string(atoms[j].rank) + " for I = " +
                                 index_set_text(mask),
                       mask, static_cast<int>(j)});
      }
    }
  }
  // (v) leaving Z_{<k} by a union lands at rho' >= k
  for (std::size_t x = 0; x < below.size(); ++x) {
    for (std::size_t y = x + 1; y < below.size(); ++y) {
      const std::uint32_t uni = below[x] | below[y];
      if (good[uni]) continue;
      if (reduced[uni] < k) {
        out.push_back({"v", "I u J = " + index_set_text(uni) + " leaves Z_{<k} with rho' = " +
                                std::to_string(reduced[uni]) + " < k",
                       uni, -1});
      }
    }
  }
  // Defensive: the result must still satisfy the lattice axioms.
  if (out.empty()) {
    const auto report = check_cyclic_flat_axioms(result_lattice(n, atoms, k));
    if (!report.ok) out.push_back({"lattice", "Z_{<k} u {E} fails " + report.axiom + ": " + report.message, 0, -1});
  }
  return out;
}

AtomMatroid construction1(int n, std::vector<AtomSpec> atoms, int k) {
  auto violations = construction1_violations(n, atoms, k);
  if (!violations.empty()) throw ConditionError(std::move(violations));

  const auto below = below_k_index_sets(atoms, k);
  Matroid m = Matroid::from_cyclic_flats(result_lattice(n, atoms, k));
  return {std::move(m), std::move(atoms), k, below};
}

std::vector<ConditionViolation> theorem9_violations(int n, const std::vector<AtomSpec>& atoms, int k) {
  check_atom_count(atoms);
  std::vector<ConditionViolation> out;
  const std::size_t m = atoms.size();
  if (k < 1) out.push_back({"k", "k must be a positive integer", 0, -1});
  if (m == 0) {
    out.push_back({"ii", "no atoms given", 0, -1});
    return out;
  }
  const std::uint32_t all = full_mask(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (atoms[i].rank <= 0 || atoms[i].rank >= atoms[i].set.size()) {
      out.push_back({"i", atom_name(i) + " has rank " + std::to_string(atoms[i].rank) + " and size " +
                              std::to_string(atoms[i].set.size()),
                     0, static_cast<int>(i)});
    }
  }
  const Subset ground = Subset::full(n);
  const Subset uni = atom_union(atoms, all);
  if (uni != ground) {
    out.push_back({"ii", "the atoms' union " + uni.to_string_one_based() + " is not E = {1.." +
                             std::to_string(n) + "}",
                   all, -1});
  }
  int eta_sum = 0;
  for (const auto& a : atoms) eta_sum += a.nullity();
  if (k > uni.size() - eta_sum) {
    out.push_back({"iii", "k = " + std::to_string(k) + " exceeds |E| - sum eta = " +
                              std::to_string(uni.size() - eta_sum),
                   all, -1});
  }
  for (std::size_t j = 0; j < m; ++j) {
    const std::uint32_t others = all & ~(std::uint32_t{1} << j);
    const int shared = (atom_union(atoms, others) & atoms[j].set).size();
    if (shared >= atoms[j].rank) {
      out.push_back({"iv", atom_name(j) + " shares " + std::to_string(shared) +
                               " elements with the other atoms, rank is " + std::to_string(atoms[j].rank),
                     others, static_cast<int>(j)});
    }
  }
  check_atoms_in_lattice(n, atoms, k, out);
  return out;
}

AtomMatroid theorem9(int n, std::vector<AtomSpec> atoms, int k) {
  auto violations = theorem9_violations(n, atoms, k);
  if (!violations.empty()) throw ConditionError(std::move(violations));
  return construction1(n, std::move(atoms), k);
}

AtomFormulaParams atom_formula_params(const AtomMatroid& am) {
  AtomFormulaParams p;
  p.n = am.matroid.size();
  p.k = am.k;
  int max_eta = 0;
  for (std::uint32_t mask : am.below_k) {
    int eta = 0;
    for (std::uint64_t b = mask; b != 0; b &= b - 1) eta += am.atoms[std::countr_zero(b)].nullity();
    max_eta = std::max(max_eta, eta);
  }
  p.d = p.n - p.k + 1 - max_eta;
  int min_eta = std::numeric_limits<int>::max();
  for (const auto& a : am.atoms) {
    min_eta = std::min(min_eta, a.nullity());
    p.r = std::max(p.r, a.rank);
  }
  p.delta = min_eta + 1;
  return p;
}

std::vector<ConditionViolation> graph_violations(const ConstructionGraph& g) {
  std::vector<ConditionViolation> out;
  if (g.m < 1) out.push_back({"shape", "the graph needs at least one vertex", 0, -1});
  if (g.m > kMaxAtoms) throw Error(ErrorCode::kTooLarge, "more than " + std::to_string(kMaxAtoms) + " vertices");
  if (static_cast<int>(g.alpha.size()) != g.m || static_cast<int>(g.beta.size()) != g.m) {
    out.push_back({"shape", "alpha and beta need one entry per vertex", 0, -1});
    return out;
  }
  if (!(0 < g.r && g.r < g.k)) out.push_back({"shape", "need 0 < r < k", 0, -1});
  if (g.delta < 2) out.push_back({"shape", "delta must be at least 2", 0, -1});

  std::vector<std::vector<char>> adj(g.m, std::vector<char>(g.m, 0));
  bool edges_ok = true;
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.m || e.v >= g.m || e.u == e.v) {
      out.push_back({"shape", "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not a valid pair",
                     0, -1});
      edges_ok = false;
      continue;
    }
    if (adj[e.u][e.v]) {
      out.push_back({"shape", "duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}", 0, -1});
      edges_ok = false;
    }
    adj[e.u][e.v] = adj[e.v][e.u] = 1;
  }
  // (i) no 3-cycles
  for (int a = 0; a < g.m; ++a) {
    for (int b = a + 1; b < g.m; ++b) {
      for (int c = b + 1; c < g.m; ++c) {
        if (adj[a][b] && adj[b][c] && adj[a][c]) {
          out.push_back({"i", "vertices " + std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + " form a 3-cycle",
                         (1U << a) | (1U << b) | (1U << c), -1});
        }
      }
    }
  }
  int alpha_sum = 0;
  int gamma_sum = 0;
  for (int i = 0; i < g.m; ++i) {
    // (ii), (iii)
    if (g.alpha[i] < 0 || g.alpha[i] > g.r - 1) {
      out.push_back({"ii", "alpha(" + std::to_string(i) + ") = " + std::to_string(g.alpha[i]) +
                               " outside 0..r-1",
                     0, i});
    }
    if (g.beta[i] < 0) {
      out.push_back({"iii", "beta(" + std::to_string(i) + ") = " + std::to_string(g.beta[i]) + " < 0", 0, i});
    }
    alpha_sum += g.alpha[i];
  }
  for (const auto& e : g.edges) {
    // (iv)
    if (e.gamma < 1) {
      out.push_back({"iv", "gamma on {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is " +
                               std::to_string(e.gamma),
                     0, -1});
    }
    gamma_sum += e.gamma;
  }
  // (v)
  if (g.k > g.r * g.m - alpha_sum - gamma_sum) {
    out.push_back({"v", "k = " + std::to_string(g.k) + " exceeds rm - sum alpha - sum gamma = " +
                            std::to_string(g.r * g.m - alpha_sum - gamma_sum),
                   0, -1});
  }
  // (vi)
  if (edges_ok) {
    for (int i = 0; i < g.m; ++i) {
      int incident = 0;
      for (const auto& e : g.edges) {
        if (e.u == i || e.v == i) incident += e.gamma;
      }
      if (g.r - g.alpha[i] <= incident) {
        out.push_back({"vi", "vertex " + std::to_string(i) + ": r - alpha = " + std::to_string(g.r - g.alpha[i]) +
                                 " <= incident gamma " + std::to_string(incident),
                       0, i});
      }
    }
  }
  return out;
}

int graph_n_formula(const ConstructionGraph& g) {
  int n = (g.r + g.delta - 1) * g.m;
  for (int i = 0; i < g.m; ++i) n += g.beta[i] - g.alpha[i];
  for (const auto& e : g.edges) n -= e.gamma;
  return n;
}

int graph_d_formula(const ConstructionGraph& g) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << g.m); ++mask) {
    int rank_part = 0;
    int value = 0;
    for (int i = 0; i < g.m; ++i) {
      if (!(mask >> i & 1U)) continue;
      rank_part += g.r - g.alpha[i];
      value += g.delta - 1 + g.beta[i];
    }
    for (const auto& e : g.edges) {
      if ((mask >> e.u & 1U) && (mask >> e.v & 1U)) rank_part -= e.gamma;
    }
    if (rank_part < g.k) best = std::max(best, value);
  }
  return graph_n_formula(g) - g.k + 1 - best;
}

std::vector<AtomSpec> graph_atoms(const ConstructionGraph& g) {
  std::vector<AtomSpec> atoms(g.m);
  std::vector<GraphEdge> edges = g.edges;
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const GraphEdge& x, const GraphEdge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
  int next = 0;
  for (const auto& e : edges) {
    for (int t = 0; t < e.gamma; ++t, ++next) {
      atoms[e.u].set = atoms[e.u].set.with(next);
      atoms[e.v].set = atoms[e.v].set.with(next);
    }
  }
  for (int i = 0; i < g.m; ++i) {
    const int size = g.r - g.alpha[i] + g.delta - 1 + g.beta[i];
    const int own = size - atoms[i].set.size();
    for (int t = 0; t < own; ++t, ++next) atoms[i].set = atoms[i].set.with(next);
    atoms[i].rank = g.r - g.alpha[i];
  }
  if (next > kMaxGroundSize) throw Error(ErrorCode::kTooLarge, "graph layout needs more than 64 elements");
  return atoms;
}

AtomMatroid graph_construction(const ConstructionGraph& g) {
  auto violations = graph_violations(g);
  if (!violations.empty()) throw ConditionError(std::move(violations));
  const int n_formula = graph_n_formula(g);
  if (n_formula > kMaxGroundSize) throw Error(ErrorCode::kTooLarge, "graph layout needs more than 64 elements");
  auto atoms = graph_atoms(g);
  const int n = atom_union(atoms, full_mask(atoms.size())).size();
  AtomMatroid built = theorem9(n, std::move(atoms), g.k);
  if (n != n_formula) {
    throw std::logic_error("graph layout has " + std::to_string(n) + " elements, formula gives " +
                           std::to_string(n_formula));
  }
  const int d_built = d_from_cyclic_flats(built.matroid.cyclic_flat_lattice());
  const int d_formula = graph_d_formula(g);
  if (d_built != d_formula) {
    throw std::logic_error("built matroid has d = " + std::to_string(d_built) + ", graph formula gives " +
                           std::to_string(d_formula));
  }
  return built;
}

AtomMatroid theorem11_construction(int n, int k, int r, int delta) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::kPreconditionFailed, what);
  };
  const ParamTuple p{n, k, r, delta};
  if (auto why = param_violation(p)) throw Error(ErrorCode::kPreconditionFailed, *why);
  require(r < k, "r < k");
  require(ceil_div(k, r) == 2, "ceil(k/r) = 2");
  const int a = p.a();
  const int b = p.b();
  require(b > a, "b > a (b = " + std::to_string(b) + ", a = " + std::to_string(a) + ")");
  require(a >= ceil_div(k, r) - 1, "a >= ceil(k/r) - 1");
  const int s = p.locality_size();
  const int m = ceil_div(n, s);
  const int c = ceil_div(b, a);
  require(m >= c + 1, "ceil(n/(r+delta-1)) >= ceil(b/a) + 1 (" + std::to_string(m) + " < " +
                          std::to_string(c + 1) + ")");
  if (n > kMaxGroundSize) throw Error(ErrorCode::kTooLarge, "n above 64");

  std::vector<AtomSpec> atoms(m);
  int next = a;  // elements 0..a-1 form the core X
  for (int i = 0; i < m; ++i) {
    int core = 0;
    if (i < c) {
      core = a;
    } else if (i == c) {
      core = b - (c - 1) * a;
    }
    for (int e = 0; e < core; ++e) atoms[i].set = atoms[i].set.with(e);
    for (int t = core; t < s; ++t, ++next) atoms[i].set = atoms[i].set.with(next);
    atoms[i].rank = r;
  }
  if (next != n) {
    throw std::logic_error("shared-core layout has " + std::to_string(next) + " elements, expected " +
                           std::to_string(n));
  }
  return theorem9(n, std::move(atoms), k);
}

bool is_optimal_theorem9(const AtomMatroid& am) {
  const auto p = atom_formula_params(am);
  const int big_k = ceil_div(p.k, p.r);
  const int a = big_k * p.r - p.k;
  const int target = big_k * (p.r + p.delta - 1) - a;
  for (const auto& atom : am.atoms) {
    if (atom.nullity() != p.delta - 1) return false;
  }
  bool ok = true;
  for_each_subset_of_size(Subset::full(static_cast<int>(am.atoms.size())), big_k, [&](Subset t) {
    if (atom_union(am.atoms, static_cast<std::uint32_t>(t.bits())).size() < target) ok = false;
    return ok;
  });
  return ok;
}

}  // namespace lrc
