#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sepred/cutsolvers.hpp"
#include "sepred/dpsolve.hpp"
#include "sepred/graph.hpp"

namespace sepred {

/// Minimum odd cycle transversal, or nullopt when it exceeds k. Iterative
/// compression, one vertex at a time, the running transversal compressed to
/// a minimum one through the 3^|W| colorings of Lemma 4.1 plus a vertex
/// cut.
std::optional<VertexSet> oct(const ColoredGraph& g, int k);

/// Lemma 4.1 translation of a recoloring demand into a separation demand:
/// X = (B n B') u (W n W'), Y = (B n W') u (W n B') for a proper coloring
/// (B', W') of a bipartite graph.
std::pair<VertexSet, VertexSet> separation_sets(const ColoredGraph& bip,
                                                const TwoColoring& coloring,
                                                const VertexSet& b_target,
                                                const VertexSet& w_target);

/// S of size at most k with g\S bipartite and G[S] in the hereditary class;
/// 3^{|S0|} branches over an optimal transversal, each turned into a
/// G-MINCUT instance.
std::optional<VertexSet> g_bipartization(const ColoredGraph& g, int k,
                                         const ConstraintSpec& spec,
                                         PipelineStats* stats = nullptr);

/// Minimum-length odd cycle via the bipartite double cover, given any set
/// s_known with g\s_known bipartite. nullopt when g is bipartite.
std::optional<std::vector<int>> shortest_odd_cycle(const ColoredGraph& g,
                                                   const VertexSet& s_known);

/// Independent set of size exactly k whose deletion makes g bipartite
/// (Theorem 4.5's annotated recursion).
std::optional<VertexSet> exact_stable_bipartization(const ColoredGraph& g,
                                                    int k,
                                                    PipelineStats* stats =
                                                        nullptr);

/// The labeled gadget graphs of the edge-deletion reduction. G' carries
/// labels 1..3, G'' adds the label-4 twins.
struct EdgeEncoding {
  ColoredGraph gp;    // G'
  ColoredGraph gpp;   // G''
  std::vector<std::pair<int, int>> edge_list;  // g edges, sorted

  int n = 0, m = 0;
  int v1(int v) const { return 2 * v; }
  int v2(int v) const { return 2 * v + 1; }
  int e1(int j) const { return 2 * n + 2 * j; }
  int e2(int j) const { return 2 * n + 2 * j + 1; }
  int vbar1(int v) const { return 2 * n + 2 * m + 2 * v; }
  int vbar2(int v) const { return 2 * n + 2 * m + 2 * v + 1; }
};
EdgeEncoding encode_edge_instance(const ColoredGraph& g);

/// The finite labeled class G_k of the edge bipartization reduction: H' and
/// its induced subgraphs for every H in the class with at most k edges and
/// no isolated vertices. Also reports the largest member size, the budget
/// of the bipartization call.
struct EdgeClass {
  ConstraintSpec spec;
  int budget = 0;
};
EdgeClass build_edge_class(
    const std::function<bool(const ColoredGraph&)>& class_member, int k);

/// Edge set of a subgraph H with at most k edges, H in the (subgraph-
/// closed) class, and g minus E(H) bipartite.
std::optional<std::vector<std::pair<int, int>>> g_edge_bipartization(
    const ColoredGraph& g, int k,
    const std::function<bool(const ColoredGraph&)>& class_member,
    PipelineStats* stats = nullptr);

/// Edge set F with |F| <= k whose contraction makes g bipartite, through
/// rank-bounded edge bipartization and Lemma 4.8.
std::optional<std::vector<std::pair<int, int>>> bipartite_contraction(
    const ColoredGraph& g, int k, PipelineStats* stats = nullptr);

}  // namespace sepred
