#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sepred/dpsolve.hpp"
#include "sepred/graph.hpp"

namespace sepred {

/// Per-pipeline statistics surfaced through the CLI.
struct PipelineStats {
  int reduced_vertices = 0;
  int decomposition_width = -1;
  size_t dp_states = 0;

  void absorb(const PipelineStats& other);
};

/// Minimum s-t separator S with |S| <= k inducing (black edges) a member of
/// the hereditary class behind `spec`; nullopt when infeasible. Pipeline:
/// reduce_terminals -> decompose -> solve with the terminals and the
/// subdivision vertices forbidden.
std::optional<VertexSet> g_mincut(const ColoredGraph& g, int s, int t, int k,
                                  const ConstraintSpec& spec,
                                  PipelineStats* stats = nullptr);

/// g_mincut with the edgeless class.
std::optional<VertexSet> stable_cut(const ColoredGraph& g, int s, int t, int k,
                                    PipelineStats* stats = nullptr);

/// Separator coverable by at most k edges: G_k-MINCUT with parameter 2k
/// where G_k holds the graphs whose vertex count minus maximum matching is
/// at most k, then an explicit edge cover is rebuilt from a maximum
/// matching.
struct EdgeInducedCut {
  VertexSet separator;
  std::vector<std::pair<int, int>> cover;
};
std::optional<EdgeInducedCut> edge_induced_vertex_cut(
    const ColoredGraph& g, int s, int t, int k, PipelineStats* stats = nullptr);

/// Minimum-vertex tree containing x with at most k vertices
/// (Dreyfus-Wagner style subset DP truncated at k); ties broken by the
/// lexicographically smallest vertex set.
std::optional<VertexSet> steiner_tree_bounded(const ColoredGraph& g,
                                              const VertexSet& x, int k);

/// Connected s-t separator of size at most k: covering set plus bounded
/// Steiner trees, then the connected-black DP on the colored torso.
std::optional<VertexSet> connected_cut(const ColoredGraph& g, int s, int t,
                                       int k, PipelineStats* stats = nullptr);

/// G-SET-MULTICUT-UNCUT: separates every cut pair, leaves every uncut pair
/// connected, black-induced subgraph in the hereditary class.
std::optional<VertexSet> multicut_uncut(
    const ColoredGraph& g,
    const std::vector<std::pair<VertexSet, VertexSet>>& cut_pairs,
    const std::vector<std::pair<VertexSet, VertexSet>>& uncut_pairs, int k,
    const ConstraintSpec& spec, PipelineStats* stats = nullptr);

/// The hereditary class of Cor 3.4: vertex count minus maximum matching at
/// most j, compiled for graphs up to max_vertices vertices.
ConstraintSpec deficiency_class(int j, int max_vertices);

}  // namespace sepred
