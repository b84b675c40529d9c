#pragma once

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepred/dpsolve.hpp"
#include "sepred/graph.hpp"
#include "sepred/hck.hpp"

namespace sepred::cli {

using json = nlohmann::ordered_json;

/// Builtin class names: edgeless, clique, all, matching,
/// max-deficiency-<j>, rank-<j>; anything else is read as a file of member
/// graphs (one per line: `<n> [u v]...`, 1-based pairs).
struct ClassSpec {
  std::string name;
  ConstraintSpec compiled{ConstraintSpec::any()};
  std::function<bool(const ColoredGraph&)> predicate;  // uncompiled form
};
ClassSpec load_class(const std::string& spec, int max_vertices);

/// Pairs file: lines `cut <ids> | <ids>` and `uncut <ids> | <ids>`,
/// whitespace-separated 1-based ids.
struct PairsFile {
  std::vector<std::pair<VertexSet, VertexSet>> cut_pairs;
  std::vector<std::pair<VertexSet, VertexSet>> uncut_pairs;
};
PairsFile load_pairs(const std::string& path, int n);

/// hck target JSON: {"H": {"n": ..., "edges": [[u,v],...], "loops": [...]},
/// "C": [...], "K": {"<id>": cap, ...}, "lists": [[...], ...]} with 1-based
/// H ids; lists are optional (default: every H vertex allowed everywhere).
struct HckInstance {
  HomTarget target;
  ListAssignment lists;
};
HckInstance load_hck_target(const std::string& path, int g_n);

/// Deterministic G(n, m) / G(n, p) generator.
ColoredGraph gen_graph(int n, int m, double p, bool use_p, uint64_t seed);

json vertex_set_json(const VertexSet& s);          // 1-based
json edge_list_json(const std::vector<std::pair<int, int>>& edges);

}  // namespace sepred::cli
