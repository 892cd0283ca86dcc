#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lrc/analysis.hpp"
#include "lrc/bounds.hpp"
#include "lrc/code.hpp"
#include "lrc/constructions.hpp"
#include "lrc/erasure.hpp"
#include "lrc/matroid.hpp"
#include "lrc/oracle.hpp"

namespace lrc::io {

using Json = nlohmann::json;

/// Version of the document formats under schemas/.
inline constexpr int kSchemaVersion = 1;

/// Compact dump with sorted keys; byte-stable for canonical documents.
std::string dump(const Json& doc);

/// Parses text, throwing SchemaError on malformed JSON.
Json parse(const std::string& text);

Json subset_to_json(Subset s);

/// {"n", "repr", "data"}. Families and lattices are written in canonical order.
Json matroid_to_json(const Matroid& m);
/// Throws SchemaError with a field path (e.g. "data[1].rank") or
/// InvalidMatroid when the data fails its axioms.
Matroid matroid_from_json(const Json& doc);

/// {"s", "n", "codewords"}.
Json code_to_json(const BlockCode& code);
BlockCode code_from_json(const Json& doc);

/// {"m", "edges": [{"u","v","gamma"}], "alpha", "beta", "k", "r", "delta"}.
Json graph_to_json(const ConstructionGraph& g);
ConstructionGraph graph_from_json(const Json& doc);

/// {"n", "k", "atoms": [{"set", "rank"}]}. `k` may be absent (returned as 0).
struct AtomsDocument {
  int n = 0;
  int k = 0;
  std::vector<AtomSpec> atoms;
};
Json atoms_to_json(const AtomsDocument& doc);
AtomsDocument atoms_from_json(const Json& doc);

Json cover_to_json(const LocalityCover& cover);
Json structure_report_to_json(const StructureReport& report);
Json chain_to_json(const FlatChain& chain, const ChainInequalities& checks);
Json theorem14_to_json(const Theorem14Bound& bound);
Json bound_report_to_json(const BoundReport& report, bool with_witness);
Json monte_carlo_to_json(const MonteCarloStats& stats);
Json exhaustive_to_json(const std::vector<ExhaustiveRow>& rows);
Json verdicts_to_json(const std::vector<oracle::OracleVerdict>& verdicts);
Json layout_search_to_json(const oracle::LayoutSearch& search);
Json violations_to_json(const std::vector<ConditionViolation>& violations);

}  // namespace lrc::io
