#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sepred/graph.hpp"
#include "sepred/tdecomp.hpp"

namespace sepred {

/// Target of list (H,C,<=K)-coloring. H is a small graph that may carry
/// loops on C; H minus C must be a single loopless edge {b, w}. The
/// parameter of the problem is k = sum of the caps.
struct HomTarget {
  int h_n = 0;
  std::vector<std::vector<char>> h_adj;  // includes loops on the diagonal
  VertexSet c;                           // constrained vertices of H
  std::map<int, int> caps;               // per vertex of c
  int b = -1, w = -1;                    // the two vertices of H \ C

  /// Validates the shape (throws) and locates b and w.
  static HomTarget make(int h_n, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<int>& loops, const VertexSet& c,
                        const std::map<int, int>& caps);

  bool adjacent(int x, int y) const { return h_adj[x][y] != 0; }
  int cap(int v) const;
  int total_cap() const;
};

/// Per G-vertex allowed subset of V(H).
using ListAssignment = std::vector<VertexSet>;

ListAssignment full_lists(const HomTarget& target, int n);

/// A homomorphism theta : V(G) -> V(H) together with its exceptional set
/// theta^{-1}(C).
struct Coloring {
  std::vector<int> theta;
  VertexSet exceptional;
};

/// Checks homomorphism property, list membership and caps.
bool valid_coloring(const ColoredGraph& g, const HomTarget& target,
                    const ListAssignment& lists, const std::vector<int>& theta);

/// Lemma 5.4: a set C'' containing the exceptional set of every minimal
/// list (H,C,<=K)-coloring with at most k exceptional vertices. Requires g
/// black-bipartite.
VertexSet hck_reduce_bipartite(const ColoredGraph& g, const HomTarget& target,
                               const ListAssignment& lists, int k);

/// Bounded-treewidth list (H,C,<=K)-coloring by DP over a nice
/// decomposition; returns the lexicographically least feasible assignment.
std::optional<Coloring> hck_solve_bounded(const ColoredGraph& g,
                                          const HomTarget& target,
                                          const ListAssignment& lists, int k,
                                          const NiceDecomposition& nice);

/// Full solver of Theorem 5.1: odd cycle transversal branching, bipartite
/// reduction, component replacement, bounded DP, and lifting back.
std::optional<Coloring> hck_solve(const ColoredGraph& g,
                                  const HomTarget& target,
                                  const ListAssignment& lists);

}  // namespace sepred
