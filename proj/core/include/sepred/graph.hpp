#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace sepred {

/// Edge colors: Black edges are original graph edges, Red edges are
/// introduced by the torso operation and never count toward induced-subgraph
/// constraints or 2-colorings.
enum class EdgeColor : uint8_t { Black, Red };

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

/// Undirected simple graph with per-vertex small-integer labels and a color
/// on every edge. Vertices are dense ids 0..n-1. No self-loops, no parallel
/// edges. Immutable by convention once built; all algorithms treat it as
/// read-only.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  explicit ColoredGraph(int n) : adj_(n), label_(n, 0) {}

  int n() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }

  /// Adds edge uv; throws on loops, out-of-range ids or duplicates.
  void add_edge(int u, int v, EdgeColor color = EdgeColor::Black);

  bool has_edge(int u, int v) const;
  bool has_black_edge(int u, int v) const;
  EdgeColor edge_color(int u, int v) const;  // throws if edge absent

  const std::vector<std::pair<int, EdgeColor>>& neighbors(int v) const {
    return adj_[v];
  }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  int vertex_label(int v) const { return label_[v]; }
  void set_vertex_label(int v, int label);

  /// All edges as (u, v, color) with u < v, sorted lexicographically.
  std::vector<std::tuple<int, int, EdgeColor>> edges() const;

  void check_vertex(int v) const;  // throws std::invalid_argument

 private:
  std::vector<std::vector<std::pair<int, EdgeColor>>> adj_;
  std::vector<int> label_;
  int m_ = 0;
};

// --- VertexSet helpers (inputs and outputs are sorted and duplicate-free) ---
namespace vset {
bool contains(const VertexSet& s, int v);
VertexSet unite(const VertexSet& a, const VertexSet& b);
VertexSet intersect(const VertexSet& a, const VertexSet& b);
VertexSet difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
void insert(VertexSet& s, int v);
VertexSet sorted_unique(std::vector<int> v);
}  // namespace vset

/// Connected components of g, each a sorted VertexSet, ordered by smallest
/// member. All edges (black and red) count toward connectivity.
std::vector<VertexSet> components(const ColoredGraph& g);

/// Components of g with the vertices of `removed` deleted.
std::vector<VertexSet> components_without(const ColoredGraph& g,
                                          const VertexSet& removed);

/// N(X): vertices outside x adjacent to at least one vertex of x.
VertexSet neighborhood(const ColoredGraph& g, const VertexSet& x);

/// True iff no component of g minus s contains vertices from both a\s and
/// b\s. Note s need not be disjoint from a or b.
bool is_separator(const ColoredGraph& g, const VertexSet& s,
                  const VertexSet& a, const VertexSet& b);

/// True iff the black edges inside s span a connected graph on s. Sets of
/// size at most one count as connected.
bool black_connected(const ColoredGraph& g, const VertexSet& s);

/// Proper 2-coloring of the black subgraph, or nullopt if it has an odd
/// cycle. Deterministic: BFS from the lowest-id vertex of each component,
/// the root colored into `b_side`.
struct TwoColoring {
  VertexSet b_side;
  VertexSet w_side;
};
std::optional<TwoColoring> bipartite_2coloring(const ColoredGraph& g);

bool is_black_bipartite(const ColoredGraph& g);

/// Induced subgraph on `verts` (colors and labels preserved); origin[i] is
/// the original id of new vertex i. ids are assigned in sorted order.
struct InducedSubgraph {
  ColoredGraph graph;
  VertexSet origin;
};
InducedSubgraph induced_subgraph(const ColoredGraph& g, const VertexSet& verts);

/// G/F: contracts every edge of f, removing loops and parallel edges.
/// Merged classes are renumbered by smallest original id. A contracted edge
/// keeps color Black if any merged parallel edge was black.
struct Contraction {
  ColoredGraph graph;
  std::vector<int> class_of;  // original vertex -> new id
};
Contraction contract_edges(const ColoredGraph& g,
                           const std::vector<std::pair<int, int>>& f);

}  // namespace sepred
