#include "lrc/io.hpp"

#include <algorithm>
#include <set>

#include "lrc/error.hpp"

namespace lrc::io {
namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kSchemaError, (path.empty() ? std::string("document") : path) + ": " + what);
}

std::string member_path(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}

std::string index_path(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

void require_object(const Json& j, const std::string& path, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) schema_error(path, "expected an object");
  for (const char* key : required) {
    if (!j.contains(key)) schema_error(member_path(path, key), "missing field");
  }
  for (const auto& item : j.items()) {
    const bool known = std::find_if(required.begin(), required.end(),
                                    [&](const char* k) { return item.key() == k; }) != required.end() ||
                       std::find_if(optional.begin(), optional.end(),
                                    [&](const char* k) { return item.key() == k; }) != optional.end();
    if (!known) schema_error(member_path(path, item.key()), "unknown field");
  }
}

int read_int(const Json& j, const std::string& path, int lo = std::numeric_limits<int>::min(),
             int hi = std::numeric_limits<int>::max()) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < lo || v > hi) {
    schema_error(path, "value " + std::to_string(v) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  return static_cast<int>(v);
}

const Json& read_array(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

Subset read_subset(const Json& j, const std::string& path, int n) {
  read_array(j, path);
  Subset out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const int e = read_int(j[i], index_path(path, i), 0, n - 1);
    if (out.contains(e)) schema_error(index_path(path, i), "duplicate element " + std::to_string(e));
    out = out.with(e);
  }
  return out;
}

std::vector<int> read_int_list(const Json& j, const std::string& path, int lo, int hi) {
  read_array(j, path);
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_int(j[i], index_path(path, i), lo, hi));
  return out;
}

Json cyclic_flat_to_json(const CyclicFlat& z) { return Json{{"set", subset_to_json(z.set)}, {"rank", z.rank}}; }

}  // namespace

std::string dump(const Json& doc) { return doc.dump(); }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema_error("", std::string("malformed JSON: ") + e.what());
  }
}

Json subset_to_json(Subset s) { return Json(s.elements()); }

Json matroid_to_json(const Matroid& m) {
  Json doc{{"n", m.size()}, {"repr", std::string(to_string(m.representation()))}};
  std::visit(
      [&](const auto& storage) {
        using T = std::decay_t<decltype(storage)>;
        if constexpr (std::is_same_v<T, SubsetFamily>) {
          SubsetFamily family = storage;
          canonicalize(family);
          Json data = Json::array();
          for (Subset s : family) data.push_back(subset_to_json(s));
          doc["data"] = std::move(data);
        } else if constexpr (std::is_same_v<T, RankTable>) {
          doc["data"] = storage.ranks;
        } else {
          Json data = Json::array();
          for (const auto& z : storage.flats()) data.push_back(cyclic_flat_to_json(z));
          doc["data"] = std::move(data);
        }
      },
      m.storage());
  return doc;
}

Matroid matroid_from_json(const Json& doc) {
  require_object(doc, "", {"n", "repr", "data"});
  const int n = read_int(doc["n"], "n", 0, kMaxGroundSize);
  if (!doc["repr"].is_string()) schema_error("repr", "expected a string");
  const std::string repr = doc["repr"].get<std::string>();
  const Json& data = doc["data"];
  if (repr == "independent_sets") {
    if (n > kMaxTableGroundSize) schema_error("n", "independent-set families are limited to n <= 24");
    read_array(data, "data");
    SubsetFamily family;
    for (std::size_t i = 0; i < data.size(); ++i) family.push_back(read_subset(data[i], index_path("data", i), n));
    return Matroid::from_independent_sets(n, std::move(family));
  }
  if (repr == "rank_table") {
    if (n > kMaxTableGroundSize) schema_error("n", "rank tables are limited to n <= 24");
    read_array(data, "data");
    const std::size_t expected = std::size_t{1} << n;
    if (data.size() != expected) {
      throw Error(ErrorCode::kMissingSubset, "data: rank table has " + std::to_string(data.size()) +
                                                 " entries, expected 2^n = " + std::to_string(expected));
    }
    RankTable table{n, std::vector<int>(expected)};
    for (std::size_t i = 0; i < expected; ++i) table.ranks[i] = read_int(data[i], index_path("data", i));
    return Matroid::from_rank_table(std::move(table));
  }
  if (repr == "cyclic_flats") {
    read_array(data, "data");
    std::vector<CyclicFlat> flats;
    for (std::size_t i = 0; i < data.size(); ++i) {
      const std::string path = index_path("data", i);
      require_object(data[i], path, {"set", "rank"});
      flats.push_back({read_subset(data[i]["set"], path + ".set", n), read_int(data[i]["rank"], path + ".rank", 0)});
    }
    return Matroid::from_cyclic_flats(CyclicFlatLattice(n, std::move(flats)));
  }
  schema_error("repr", "expected independent_sets, rank_table or cyclic_flats");
}

Json code_to_json(const BlockCode& code) {
  return Json{{"s", code.alphabet_size()}, {"n", code.length()}, {"codewords", code.codewords()}};
}

BlockCode code_from_json(const Json& doc) {
  require_object(doc, "", {"s", "n", "codewords"});
  const int s = read_int(doc["s"], "s", 2);
  const int n = read_int(doc["n"], "n", 0, kMaxGroundSize);
  const Json& words = read_array(doc["codewords"], "codewords");
  std::vector<Codeword> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string path = index_path("codewords", i);
    auto w = read_int_list(words[i], path, 0, s - 1);
    if (static_cast<int>(w.size()) != n) schema_error(path, "codeword length differs from n");
    out.push_back(std::move(w));
  }
  return BlockCode(s, n, std::move(out));
}

Json graph_to_json(const ConstructionGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json{{"u", e.u}, {"v", e.v}, {"gamma", e.gamma}});
  return Json{{"m", g.m},         {"edges", std::move(edges)}, {"alpha", g.alpha}, {"beta", g.beta},
              {"k", g.k},         {"r", g.r},                  {"delta", g.delta}};
}

ConstructionGraph graph_from_json(const Json& doc) {
  require_object(doc, "", {"m", "edges", "alpha", "beta", "k", "r", "delta"});
  ConstructionGraph g;
  g.m = read_int(doc["m"], "m", 1, kMaxAtoms);
  const Json& edges = read_array(doc["edges"], "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = index_path("edges", i);
    require_object(edges[i], path, {"u", "v", "gamma"});
    g.edges.push_back({read_int(edges[i]["u"], path + ".u", 0, g.m - 1),
                       read_int(edges[i]["v"], path + ".v", 0, g.m - 1),
                       read_int(edges[i]["gamma"], path + ".gamma")});
  }
  g.alpha = read_int_list(doc["alpha"], "alpha", std::numeric_limits<int>::min(), std::numeric_limits<int>::max());
  g.beta = read_int_list(doc["beta"], "beta", std::numeric_limits<int>::min(), std::numeric_limits<int>::max());
  if (static_cast<int>(g.alpha.size()) != g.m) schema_error("alpha", "needs one entry per vertex");
  if (static_cast<int>(g.beta.size()) != g.m) schema_error("beta", "needs one entry per vertex");
  g.k = read_int(doc["k"], "k");
  g.r = read_int(doc["r"], "r");
  g.delta = read_int(doc["delta"], "delta");
  return g;
}

Json atoms_to_json(const AtomsDocument& doc) {
  Json atoms = Json::array();
  for (const auto& a : doc.atoms) atoms.push_back(Json{{"set", subset_to_json(a.set)}, {"rank", a.rank}});
  Json out{{"n", doc.n}, {"atoms", std::move(atoms)}};
  if (doc.k > 0) out["k"] = doc.k;
  return out;
}

AtomsDocument atoms_from_json(const Json& doc) {
  require_object(doc, "", {"n", "atoms"}, {"k"});
  AtomsDocument out;
  out.n = read_int(doc["n"], "n", 0, kMaxGroundSize);
  if (doc.contains("k")) out.k = read_int(doc["k"], "k");
  const Json& atoms = read_array(doc["atoms"], "atoms");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string path = index_path("atoms", i);
    require_object(atoms[i], path, {"set", "rank"});
    out.atoms.push_back({read_subset(atoms[i]["set"], path + ".set", out.n), read_int(atoms[i]["rank"], path + ".rank")});
  }
  return out;
}

Json cover_to_json(const LocalityCover& cover) {
  Json sets = Json::array();
  for (Subset s : cover.sets) sets.push_back(subset_to_json(s));
  return Json{{"r", cover.r}, {"delta", cover.delta}, {"sets", std::move(sets)}};
}

Json structure_report_to_json(const StructureReport& report) {
  Json conditions = Json::array();
  for (const auto& c : report.conditions) {
    Json witnesses = Json::array();
    for (Subset s : c.witnesses) witnesses.push_back(subset_to_json(s));
    conditions.push_back(Json{{"id", c.id}, {"ok", c.ok}, {"detail", c.detail}, {"witnesses", std::move(witnesses)}});
  }
  return Json{{"ok", report.ok()}, {"conditions", std::move(conditions)},
              {"collections_checked", report.collections_checked}};
}

Json chain_to_json(const FlatChain& chain, const ChainInequalities& checks) {
  Json flats = Json::array();
  for (Subset s : chain.flats) flats.push_back(subset_to_json(s));
  Json sets = Json::array();
  for (Subset s : chain.locality_sets) sets.push_back(subset_to_json(s));
  return Json{{"flats", std::move(flats)},
              {"locality_sets", std::move(sets)},
              {"length", chain.length()},
              {"inequalities",
               Json{{"ok", checks.ok()},
                    {"d", checks.d},
                    {"distance_bound", checks.distance_bound},
                    {"length", checks.length},
                    {"min_length", checks.min_length},
                    {"steps_ok", checks.steps_ok}}}};
}

Json theorem14_to_json(const Theorem14Bound& b) {
  return Json{{"value", b.value},   {"branch", std::string(to_string(b.branch))},
              {"m", b.m},           {"q", b.q},
              {"v", b.v},           {"remaining", b.remaining},
              {"d_new", b.d_new},   {"d_old", b.d_old},
              {"gap_bound", b.gap_bound}};
}

Json bound_report_to_json(const BoundReport& report, bool with_witness) {
  const auto& p = report.params;
  Json out{{"params",
            Json{{"n", p.n}, {"k", p.k}, {"r", p.r}, {"delta", p.delta}, {"a", p.a()}, {"b", p.b()}}},
           {"singleton", report.singleton},
           {"verdict", std::string(to_string(report.verdict))}};
  out["old_lower"] = report.old_lower ? Json(*report.old_lower) : Json(nullptr);
  out["new_lower"] = report.new_lower ? Json(report.new_lower->value) : Json(nullptr);
  out["theorem14"] = report.new_lower ? theorem14_to_json(*report.new_lower) : Json(nullptr);
  out["witness"] = report.witness.empty() ? Json(nullptr) : Json(report.witness);
  out["witness_check"] = report.witness_check.empty() ? Json(nullptr) : Json(report.witness_check);
  out["reason"] = report.reason;
  if (with_witness && report.witness_matroid) out["witness_matroid"] = matroid_to_json(*report.witness_matroid);
  return out;
}

Json monte_carlo_to_json(const MonteCarloStats& s) {
  const auto rate = [&](std::int64_t count) { return static_cast<double>(count) / static_cast<double>(s.trials); };
  return Json{{"p", s.p},
              {"trials", s.trials},
              {"seed", s.seed},
              {"counts",
               Json{{"locally_repaired", s.locally_repaired},
                    {"globally_decodable", s.globally_decodable},
                    {"lost", s.lost},
                    {"erasures", s.erasures},
                    {"repair_events", s.repair_events},
                    {"contacts", s.contacts}}},
              {"rates",
               Json{{"locally_repaired", rate(s.locally_repaired)},
                    {"globally_decodable", rate(s.globally_decodable)},
                    {"lost", rate(s.lost)}}},
              {"mean_contacts_per_trial", rate(s.contacts)},
              {"rng", "mt19937_64, seed_seq{seed, trial}, 53-bit uniform < p"}};
}

Json exhaustive_to_json(const std::vector<ExhaustiveRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"size", r.size},
                       {"patterns", r.patterns},
                       {"globally_decodable", r.globally_decodable},
                       {"locally_repaired", r.locally_repaired}});
  }
  return Json{{"rows", std::move(out)}};
}

Json verdicts_to_json(const std::vector<oracle::OracleVerdict>& verdicts) {
  Json list = Json::array();
  bool all = true;
  for (const auto& v : verdicts) {
    Json witnesses = Json::array();
    for (Subset s : v.witnesses) witnesses.push_back(subset_to_json(s));
    list.push_back(Json{{"subject", v.subject},
                        {"expected", v.expected},
                        {"actual", v.actual},
                        {"agree", v.agree},
                        {"witnesses", std::move(witnesses)}});
    all = all && v.agree;
  }
  return Json{{"agree", all}, {"verdicts", std::move(list)}};
}

Json layout_search_to_json(const oracle::LayoutSearch& search) {
  Json atoms = Json::array();
  for (const auto& a : search.best_atoms) atoms.push_back(Json{{"set", subset_to_json(a.set)}, {"rank", a.rank}});
  return Json{{"best_d", search.best_d ? Json(*search.best_d) : Json(nullptr)},
              {"best_m", search.best_m},
              {"best_atoms", std::move(atoms)},
              {"layouts_checked", search.layouts_checked},
              {"singleton", search.singleton},
              {"optimal", search.optimal()}};
}

Json violations_to_json(const std::vector<ConditionViolation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) {
    out.push_back(Json{{"condition", v.condition},
                       {"detail", v.detail},
                       {"index_set", Subset(v.index_set).elements()},
                       {"j", v.j}});
  }
  return out;
}

}  // namespace lrc::io
