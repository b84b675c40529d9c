#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "sepred/dpsolve.hpp"
#include "sepred/graph.hpp"
#include "sepred/hck.hpp"

namespace sepred::oracle {

/// Brute-force reference implementations: the ground truth of the property
/// tests, also reachable from the CLI verify mode. Exhaustive and
/// definitionally correct; every oracle throws when the instance exceeds
/// its enumeration cap.

/// Exhaustive minimum over all S with |S| <= k, same tie-breaking contract
/// as solve (smallest size, then lexicographically smallest set).
std::optional<VertexSet> brute_constrained_cut(const ColoredGraph& g,
                                               const SeparationDemand& demand,
                                               int k,
                                               const ConstraintSpec& spec,
                                               const VertexSet& forbidden);

/// Union of all inclusionwise-minimal s-t separators of size at most k.
VertexSet brute_minimal_separator_union(const ColoredGraph& g, int s, int t,
                                        int k);

/// Minimum s-t separator size by subset enumeration (for Menger checks).
std::optional<int> brute_min_separator_size(const ColoredGraph& g, int s,
                                            int t, int k);

/// Minimum S (size <= k, or exactly k when exact) with g\S black-bipartite
/// and the induced subgraph accepted by class_member.
std::optional<VertexSet> brute_bipartization(
    const ColoredGraph& g, int k,
    const std::function<bool(const ColoredGraph&)>& class_member, bool exact);

/// Exhaustive list (H,C,<=K)-coloring by backtracking; when minimize is set
/// the coloring with fewest exceptional vertices is returned.
std::optional<Coloring> brute_hck(const ColoredGraph& g,
                                  const HomTarget& target,
                                  const ListAssignment& lists,
                                  bool minimize_exceptional = false);

/// Minimum edge set whose contraction makes g bipartite, size <= k.
std::optional<std::vector<std::pair<int, int>>> brute_contraction(
    const ColoredGraph& g, int k);

/// Feasibility of the edge-induced vertex cut problem by enumerating edge
/// subsets of size <= k.
std::optional<std::vector<std::pair<int, int>>> brute_edge_induced_cut(
    const ColoredGraph& g, int s, int t, int k);

/// Minimum connected vertex set containing x with at most k vertices.
std::optional<VertexSet> brute_steiner(const ColoredGraph& g,
                                       const VertexSet& x, int k);

}  // namespace sepred::oracle
