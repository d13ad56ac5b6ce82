#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "decmin/applications.hpp"
#include "decmin/canonical.hpp"
#include "decmin/core.hpp"
#include "decmin/matroid.hpp"
#include "decmin/netflow.hpp"
#include "decmin/orientation.hpp"

namespace decmin::io {

using json = nlohmann::ordered_json;

// {"n": k, "values": {"<mask>": int | "-inf"}, "lower": [...], "upper": [...]}
// Missing masks read as -inf, except the empty set which is 0.
BaseHandle table_from_json(const json& j);
json table_to_json(const SetFn& p);

json decomposition_to_json(const CanonicalDecomposition& d);
CanonicalDecomposition decomposition_from_json(const json& j);

// "p orient n m", then "e u v [mult] [ell] [cost_uv cost_vu]" and
// "b v f g" lines.  Nodes are 1-based; "c" and "#" start comments.
struct GraphFile {
  Graph graph;
  std::optional<NodeBounds> bounds;
};
GraphFile read_graph(std::istream& in);

// "p digraph n m", then "a u v [mult]" lines; 1-based.
Digraph read_digraph(std::istream& in);

// Digraph lines "a u v cap", plus "S: ...", "T: ..." and optional "M: x".
MegiddoProblem read_megiddo(std::istream& in);

// {"type": "uniform", "n": 4, "rank": 2}
// {"type": "partition", "blocks": [0, 0, 1], "caps": [1, 1]}
// {"type": "graphic", "nodes": 3, "edges": [[0, 1], [1, 2]]}
// {"type": "bases", "n": 4, "bases": [[0, 1], [2, 3]]}
// Elements are 0-based.
MatroidPtr matroid_from_json(const json& j);

// {"S": 2, "T": 1, "edges": [[0, 0], {"s": 1, "t": 0, "cap": 1, "cost": 0}],
//  "m_t": [...], "f_t", "g_t", "f_s", "g_s", "gamma"}; 0-based.
SemiMatchingProblem semimatching_from_json(const json& j);

IntVec parse_vector(const std::string& csv);
std::vector<int> parse_nodes(const std::string& csv);  // 1-based in, 0-based out

}  // namespace decmin::io
