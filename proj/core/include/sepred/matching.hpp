#pragma once

#include <utility>
#include <vector>

#include "sepred/graph.hpp"

namespace sepred {

/// Maximum matching of a small general graph by branching; intended for
/// graphs of at most ~12 vertices (class predicates, cover reconstruction).
std::vector<std::pair<int, int>> max_matching_small(const ColoredGraph& g);

int matching_number_small(const ColoredGraph& g);

/// Maximum matching of a black-bipartite graph via augmenting paths.
std::vector<std::pair<int, int>> max_matching_bipartite(const ColoredGraph& g);

/// Maximum independent set of a black-bipartite graph (Konig: complement of
/// a minimum vertex cover built from a maximum matching). Deterministic.
VertexSet max_independent_set_bipartite(const ColoredGraph& g);

}  // namespace sepred
