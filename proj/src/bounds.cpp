#include "lrc/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "lrc/error.hpp"

namespace lrc {
namespace {

ParamTuple checked_tuple(int n, int k, int r, int delta) {
  const ParamTuple p{n, k, r, delta};
  if (auto why = param_violation(p)) throw Error(ErrorCode::kBadParams, *why);
  return p;
}

void require_b_above_a(const ParamTuple& p) {
  if (p.b() <= p.a()) {
    throw Error(ErrorCode::kBadParams, "needs b > a (a = " + std::to_string(p.a()) + ", b = " +
                                           std::to_string(p.b()) + ")");
  }
}

int max_eta(const std::vector<AtomSpec>& atoms) {
  int out = 0;
  for (const auto& a : atoms) out = std::max(out, a.nullity());
  return out;
}

}  // namespace

std::string_view to_string(Theorem14Branch branch) {
  return branch == Theorem14Branch::kRemaining ? "remaining" : "spread";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

int old_lower_bound(int n, int k, int r, int delta) {
  const auto p = checked_tuple(n, k, r, delta);
  require_b_above_a(p);
  const int base = n - k + 1 - ceil_div(k, r) * (delta - 1);
  return p.b() <= r - 1 ? base : base + (p.b() - r);
}

Theorem14Bound theorem14_lower_bound(int n, int k, int r, int delta) {
  const auto p = checked_tuple(n, k, r, delta);
  require_b_above_a(p);
  if (r >= k) throw Error(ErrorCode::kBadParams, "needs r < k");
  const int big_k = ceil_div(k, r);
  const int s = p.locality_size();
  const int b = p.b();
  Theorem14Bound out;
  out.m = ceil_div(n, s) - 1;
  out.q = (s - b) / out.m;
  out.v = s - b - out.q * out.m;
  out.remaining = n - k + 1 - big_k * (delta - 1);
  out.d_new = n - k + 1 - (big_k - 1) * (out.q + delta - 1) - std::min(out.v, big_k - 1);
  out.d_old = out.remaining + (b - r);
  out.gap_bound = out.q * (out.m - big_k + 1);
  if (delta - 1 <= (big_k - 1) * out.q + std::min(out.v, big_k - 1)) {
    out.branch = Theorem14Branch::kRemaining;
    out.value = out.remaining;
  } else {
    out.branch = Theorem14Branch::kSpread;
    out.value = out.d_new;
  }
  return out;
}

int even_distribution_nullity_bound(int n, int k, int r, int m) {
  if (m < 1 || r < 1 || k < 1 || n < r * m) {
    throw Error(ErrorCode::kBadParams, "needs m, r, k >= 1 and n >= r m");
  }
  const int big_k = ceil_div(k, r);
  const int s = n - r * m;
  return (big_k - 1) * (s / m) + std::min(big_k - 1, s - (s / m) * m);
}

ConstructionGraph theorem14_graph(int n, int k, int r, int delta) {
  const auto bound = theorem14_lower_bound(n, k, r, delta);
  ConstructionGraph g;
  g.m = bound.m;
  g.k = k;
  g.r = r;
  g.delta = delta;
  g.alpha.assign(g.m, 0);
  g.beta.assign(g.m, bound.q);
  for (int i = 0; i < bound.v; ++i) g.beta[i] = bound.q + 1;
  return g;
}

AtomMatroid theorem14_construction(int n, int k, int r, int delta) {
  return graph_construction(theorem14_graph(n, k, r, delta));
}

int max_below_k_size(const AtomMatroid& am) {
  int out = 0;
  for (std::uint32_t mask : am.below_k) out = std::max(out, std::popcount(mask));
  return out;
}

AtomMatroid redistribute_nullity(const AtomMatroid& am, int r, int delta) {
  const int n = am.matroid.size();
  const int m = static_cast<int>(am.atoms.size());
  const int big_k = ceil_div(am.k, r);
  if (r < 1 || delta < 2) throw Error(ErrorCode::kBadParams, "need r >= 1 and delta >= 2");
  for (int i = 0; i < m; ++i) {
    if (am.atoms[i].rank > r || am.atoms[i].nullity() < delta - 1) {
      throw Error(ErrorCode::kPreconditionFailed,
                  "F_" + std::to_string(i + 1) + " breaks rank <= r or nullity >= delta-1");
    }
  }
  if (max_below_k_size(am) != big_k - 1) {
    throw Error(ErrorCode::kPreconditionFailed, "largest |I| with F_I in Z_{<k} is " +
                                                    std::to_string(max_below_k_size(am)) + ", needs " +
                                                    std::to_string(big_k - 1));
  }
  if (m < ceil_div(n, r + delta - 1)) {
    throw Error(ErrorCode::kPreconditionFailed, "fewer than ceil(n/(r+delta-1)) atoms");
  }

  int u = -1;
  for (int i = 0; i < m && u < 0; ++i) {
    if (am.atoms[i].nullity() > delta - 1) u = i;
  }
  if (u < 0) throw Error(ErrorCode::kNoExcessNullity, "every atom already has nullity delta-1");

  std::vector<AtomSpec> atoms = am.atoms;
  Subset shared;
  for (int i = 0; i < m; ++i) {
    if (i != u) shared |= atoms[i].set;
  }
  const Subset own = atoms[u].set - shared;
  if (own.empty()) throw Error(ErrorCode::kPreconditionFailed, "F_u has no private element");
  const int x = own.lowest();
  atoms[u].set = atoms[u].set.without(x);

  // x was private to F_u, so it now lies in no atom.
  int j = -1;
  for (int i = 0; i < m && j < 0; ++i) {
    if (atoms[i].rank < r) j = i;
  }
  if (j >= 0) {
    atoms[j].set = atoms[j].set.with(x);
    atoms[j].rank += 1;
  } else {
    int donor = -1;
    int partner = -1;
    for (int a = 0; a < m && donor < 0; ++a) {
      for (int b = a + 1; b < m; ++b) {
        if (atoms[a].set.intersects(atoms[b].set)) {
          donor = a;
          partner = b;
          break;
        }
      }
    }
    if (donor < 0) throw Error(ErrorCode::kNoDonorPair, "no two atoms intersect");
    const int y = (atoms[donor].set & atoms[partner].set).lowest();
    atoms[donor].set = atoms[donor].set.without(y).with(x);
  }

  const int eta_before = am.atoms[u].nullity();
  AtomMatroid next = theorem9(n, std::move(atoms), am.k);
  if (next.atoms[u].nullity() != eta_before - 1) {
    throw std::logic_error("redistribution did not lower the nullity of F_u by one");
  }
  if (max_below_k_size(next) != big_k - 1) {
    throw std::logic_error("redistribution changed the largest index set in Z_{<k}");
  }
  return next;
}

std::vector<AtomMatroid> redistribute_until_optimal(const AtomMatroid& am, int r, int delta) {
  std::vector<AtomMatroid> steps{am};
  while (max_eta(steps.back().atoms) > delta - 1) {
    steps.push_back(redistribute_nullity(steps.back(), r, delta));
  }
  return steps;
}

AtomMatroid broad_witness(int n, int k, int r, int delta) {
  const auto p = checked_tuple(n, k, r, delta);
  if (p.b() > p.a()) throw Error(ErrorCode::kBadParams, "the broad layout needs b <= a");
  const int s = p.locality_size();
  const int m = ceil_div(n, s);
  std::vector<AtomSpec> atoms(m);
  int next = 0;
  for (int i = 0; i < m; ++i) {
    const int rank = i == m - 1 ? r - p.b() : r;
    for (int t = 0; t < rank + delta - 1; ++t, ++next) atoms[i].set = atoms[i].set.with(next);
    atoms[i].rank = rank;
  }
  return theorem9(n, std::move(atoms), k);
}

BoundReport classify_achievability(int n, int k, int r, int delta, int full_check_limit) {
  const auto p = checked_tuple(n, k, r, delta);
  BoundReport report;
  report.params = p;
  report.singleton = singleton_bound(n, k, r, delta);
  if (p.b() > p.a()) {
    report.old_lower = old_lower_bound(n, k, r, delta);
    if (r < k) report.new_lower = theorem14_lower_bound(n, k, r, delta);
  }

  std::optional<Matroid> witness;
  if (r >= k) {
    report.witness = "uniform";
    witness = Matroid::uniform(n, k);
  } else if (p.b() <= p.a()) {
    report.witness = "broad";
    witness = broad_witness(n, k, r, delta).matroid;
  } else {
    try {
      witness = theorem11_construction(n, k, r, delta).matroid;
      report.witness = "theorem11";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPreconditionFailed) throw;
      report.verdict = Verdict::kUnknown;
      report.reason = std::string("b > a and the shared-core layout does not apply: ") + e.what();
      return report;
    }
  }

  bool achieved = false;
  if (n <= full_check_limit) {
    report.witness_check = "achieves_bound";
    achieved = achieves_bound(*witness, r, delta);
  } else {
    report.witness_check = "cyclic_flats";
    achieved = d_from_cyclic_flats(witness->cyclic_flat_lattice()) == report.singleton;
  }
  if (!achieved) {
    throw std::logic_error("witness '" + report.witness + "' does not reach the bound");
  }
  report.verdict = Verdict::kYes;
  report.witness_matroid = std::move(witness);
  return report;
}

}  // namespace lrc
