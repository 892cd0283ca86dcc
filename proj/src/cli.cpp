#include "lrc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lrc/analysis.hpp"
#include "lrc/bounds.hpp"
#include "lrc/code.hpp"
#include "lrc/constructions.hpp"
#include "lrc/erasure.hpp"
#include "lrc/error.hpp"
#include "lrc/io.hpp"
#include "lrc/oracle.hpp"

namespace lrc::cli {
namespace {

using io::Json;

struct Tuple {
  int n = 0;
  int k = 0;
  int r = 0;
  int delta = 0;
};

void add_tuple_options(CLI::App* cmd, Tuple& t) {
  cmd->add_option("--n", t.n, "code length")->required();
  cmd->add_option("--k", t.k, "dimension (rank of E)")->required();
  cmd->add_option("--r", t.r, "locality")->required();
  cmd->add_option("--delta", t.delta, "local distance")->required();
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

Json analyze(const Matroid& m, int r, int delta) {
  const auto basic = params_from_matroid(m);
  const ParamTuple tuple{basic.n, basic.k, r, delta};
  const int bound = singleton_bound(basic.n, basic.k, r, delta);
  const auto cover = has_locality(m, r, delta);
  Json report{{"params",
               Json{{"n", basic.n},
                    {"k", basic.k},
                    {"d", basic.d},
                    {"r", r},
                    {"delta", delta},
                    {"a", tuple.a()},
                    {"b", tuple.b()},
                    {"valid", validate_params(basic.n, basic.k, r, delta)}}},
              {"bound", bound}};
  if (!cover) {
    report["locality"] = nullptr;
    report["achieves"] = nullptr;
    report["structure_report"] = nullptr;
    report["chain"] = nullptr;
    return report;
  }
  report["locality"] = io::cover_to_json(*cover);
  report["achieves"] = basic.d == bound;
  report["structure_report"] = r < basic.k ? io::structure_report_to_json(check_structure_theorem(m, *cover))
                                           : Json(nullptr);
  const auto chain = find_locality_chain(m, *cover);
  report["chain"] = io::chain_to_json(chain, check_chain_inequalities(m, chain));
  return report;
}

std::string csv_cell(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroid tools for locally repairable codes", "lrc"};
  app.set_version_flag("--version", std::string("lrc ") + kVersion + " (schema " +
                                        std::to_string(io::kSchemaVersion) + ")");
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a matroid and print its JSON document");
  construct->require_subcommand(1);
  Tuple t11;
  auto* c_t11 = construct->add_subcommand("theorem11", "shared-core layout reaching the bound");
  add_tuple_options(c_t11, t11);
  Tuple t14;
  auto* c_t14 = construct->add_subcommand("theorem14", "spread-nullity layout realizing the improved lower bound");
  add_tuple_options(c_t14, t14);
  std::string graph_path;
  auto* c_graph = construct->add_subcommand("graph", "build from a construction graph document");
  c_graph->add_option("file", graph_path, "graph JSON, - for stdin")->required();
  std::string atoms_path;
  int atoms_k = 0;
  bool atoms_general = false;
  auto* c_atoms = construct->add_subcommand("atoms", "build from declared atoms");
  c_atoms->add_option("file", atoms_path, "atoms JSON, - for stdin")->required();
  c_atoms->add_option("--k", atoms_k, "rank of E (overrides the document)");
  c_atoms->add_flag("--general", atoms_general, "check the general conditions only (not the restricted subclass)");

  // analyze
  std::string analyze_path;
  int analyze_r = 0;
  int analyze_delta = 0;
  auto* analyze_cmd = app.add_subcommand("analyze", "LRC parameters, bound, structure and chain report");
  analyze_cmd->add_option("file", analyze_path, "matroid JSON, - for stdin")->required();
  analyze_cmd->add_option("--r", analyze_r, "locality")->required();
  analyze_cmd->add_option("--delta", analyze_delta, "local distance")->required();

  // bounds
  Tuple bt;
  bool bounds_witness = false;
  int bounds_limit = 12;
  auto* bounds_cmd = app.add_subcommand("bounds", "Singleton bound, lower bounds and achievability");
  add_tuple_options(bounds_cmd, bt);
  bounds_cmd->add_flag("--witness", bounds_witness, "include the witness matroid");
  bounds_cmd->add_option("--full-check-limit", bounds_limit, "largest n checked with the full locality search");

  // sweep
  int sweep_nmin = 1;
  int sweep_nmax = 20;
  int sweep_limit = 12;
  std::string sweep_format = "json";
  auto* sweep_cmd = app.add_subcommand("sweep", "classify every valid (n,k,r,delta) up to a size");
  sweep_cmd->add_option("--nmin", sweep_nmin, "smallest n");
  sweep_cmd->add_option("--nmax", sweep_nmax, "largest n");
  sweep_cmd->add_option("--full-check-limit", sweep_limit, "largest n checked with the full locality search");
  sweep_cmd->add_option("--format", sweep_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  // simulate
  std::string sim_path;
  int sim_r = 0;
  int sim_delta = 0;
  double sim_p = 0.1;
  std::int64_t sim_trials = 10000;
  std::optional<std::uint64_t> sim_seed;
  int sim_threads = 1;
  bool sim_exhaustive = false;
  int sim_max_erasures = -1;
  auto* sim_cmd = app.add_subcommand("simulate", "erasure repair simulation");
  sim_cmd->add_option("file", sim_path, "matroid JSON, - for stdin")->required();
  sim_cmd->add_option("--r", sim_r, "locality")->required();
  sim_cmd->add_option("--delta", sim_delta, "local distance")->required();
  sim_cmd->add_option("--p", sim_p, "erasure probability")->check(CLI::Range(0.0, 1.0));
  sim_cmd->add_option("--trials", sim_trials, "number of trials")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--seed", sim_seed, "random seed (required for Monte Carlo)");
  sim_cmd->add_option("--threads", sim_threads, "worker threads")->check(CLI::PositiveNumber);
  sim_cmd->add_flag("--exhaustive", sim_exhaustive, "enumerate every erasure pattern instead of sampling");
  sim_cmd->add_option("--max-erasures", sim_max_erasures, "largest pattern size for --exhaustive");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force cross-checks");
  oracle_cmd->require_subcommand(1);
  std::string verify_path;
  std::optional<int> verify_r;
  std::optional<int> verify_delta;
  auto* o_verify = oracle_cmd->add_subcommand("verify", "compare library results with brute force");
  o_verify->add_option("file", verify_path, "matroid JSON, - for stdin")->required();
  o_verify->add_option("--r", verify_r, "locality");
  o_verify->add_option("--delta", verify_delta, "local distance");
  Tuple et;
  std::optional<int> exhaust_m;
  auto* o_exhaust = oracle_cmd->add_subcommand("exhaust", "best d over all restricted-intersection layouts");
  add_tuple_options(o_exhaust, et);
  o_exhaust->add_option("--m", exhaust_m, "number of atoms (default: all)");

  // code
  auto* code_cmd = app.add_subcommand("code", "explicit block codes");
  code_cmd->require_subcommand(1);
  std::string code_path;
  auto* c_induce = code_cmd->add_subcommand("induce", "matroid induced by an almost affine code");
  c_induce->add_option("file", code_path, "code JSON, - for stdin")->required();

  std::vector<std::string> argv_storage{"lrc"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    Json result;
    bool ok = true;
    if (c_t11->parsed()) {
      result = io::matroid_to_json(theorem11_construction(t11.n, t11.k, t11.r, t11.delta).matroid);
    } else if (c_t14->parsed()) {
      result = io::matroid_to_json(theorem14_construction(t14.n, t14.k, t14.r, t14.delta).matroid);
    } else if (c_graph->parsed()) {
      const auto g = io::graph_from_json(io::parse(read_source(graph_path, in)));
      result = io::matroid_to_json(graph_construction(g).matroid);
    } else if (c_atoms->parsed()) {
      auto doc = io::atoms_from_json(io::parse(read_source(atoms_path, in)));
      const int k = atoms_k > 0 ? atoms_k : doc.k;
      if (k <= 0) throw UsageError("k missing: pass --k or put it in the document");
      auto built = atoms_general ? construction1(doc.n, std::move(doc.atoms), k)
                                 : theorem9(doc.n, std::move(doc.atoms), k);
      result = io::matroid_to_json(built.matroid);
    } else if (analyze_cmd->parsed()) {
      const auto m = io::matroid_from_json(io::parse(read_source(analyze_path, in)));
      result = analyze(m, analyze_r, analyze_delta);
    } else if (bounds_cmd->parsed()) {
      result = io::bound_report_to_json(classify_achievability(bt.n, bt.k, bt.r, bt.delta, bounds_limit),
                                        bounds_witness);
    } else if (sweep_cmd->parsed()) {
      std::vector<BoundReport> rows;
      for (int n = std::max(1, sweep_nmin); n <= sweep_nmax; ++n) {
        for (int k = 1; k <= n; ++k) {
          for (int r = 1; r <= k; ++r) {
            for (int delta = 2; delta <= n; ++delta) {
              if (validate_params(n, k, r, delta)) rows.push_back(classify_achievability(n, k, r, delta, sweep_limit));
            }
          }
        }
      }
      if (sweep_format == "csv") {
        out << "n,k,r,delta,a,b,singleton,old_lower,new_lower,verdict,witness\n";
        for (const auto& row : rows) {
          const auto& p = row.params;
          out << p.n << ',' << p.k << ',' << p.r << ',' << p.delta << ',' << p.a() << ',' << p.b() << ','
              << row.singleton << ',' << csv_cell(row.old_lower) << ','
              << csv_cell(row.new_lower ? std::optional<int>(row.new_lower->value) : std::nullopt) << ','
              << to_string(row.verdict) << ',' << row.witness << '\n';
        }
        return 0;
      }
      Json list = Json::array();
      for (const auto& row : rows) list.push_back(io::bound_report_to_json(row, false));
      result = Json{{"rows", std::move(list)}};
    } else if (sim_cmd->parsed()) {
      const auto m = io::matroid_from_json(io::parse(read_source(sim_path, in)));
      const auto cover = has_locality(m, sim_r, sim_delta);
      if (!cover) throw Error(ErrorCode::kNoLocality, "the matroid has no such locality");
      if (sim_exhaustive) {
        const int t = sim_max_erasures >= 0 ? sim_max_erasures : m.size();
        result = io::exhaustive_to_json(exhaustive_erasures(m, *cover, t));
      } else {
        if (!sim_seed) throw UsageError("--seed is required for Monte-Carlo runs");
        result = io::monte_carlo_to_json(monte_carlo(m, *cover, sim_p, sim_trials, *sim_seed, sim_threads));
      }
    } else if (o_verify->parsed()) {
      const auto m = io::matroid_from_json(io::parse(read_source(verify_path, in)));
      if (verify_r.has_value() != verify_delta.has_value()) throw UsageError("give both --r and --delta or neither");
      result = io::verdicts_to_json(oracle::verify(m, verify_r, verify_delta));
      ok = result["agree"].get<bool>();
    } else if (o_exhaust->parsed()) {
      result = io::layout_search_to_json(oracle::exhaust_theorem9_layouts(et.n, et.k, et.r, et.delta, exhaust_m));
    } else if (c_induce->parsed()) {
      result = io::matroid_to_json(induce_matroid(io::code_from_json(io::parse(read_source(code_path, in)))));
    }
    out << io::dump(result) << '\n';
    return ok ? 0 : 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const ConditionError& e) {
    err << "error: " << e.what() << '\n' << io::dump(io::violations_to_json(e.violations())) << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace lrc::cli
