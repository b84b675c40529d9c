#pragma once

#include <optional>

#include "sepred/graph.hpp"

namespace sepred {

/// origin_map entry for the subdivision vertices introduced when replacing
/// torso-created edges.
constexpr int kSubdivision = -1;

/// Output of reduce_terminals: the covering set C' (original ids), the
/// reduced graph G*, and per reduced vertex its original id (or
/// kSubdivision).
struct ReductionResult {
  VertexSet cover;
  ColoredGraph reduced;
  std::vector<int> origin_map;

  /// reduced id of an original vertex; -1 if absent.
  int reduced_id(int original) const;
};

/// C' of Lemma 2.11: contains every vertex of every inclusionwise-minimal
/// s-t separator of size at most k and is disjoint from {s, t}. Recurses on
/// the excess e = k - ell through the layer graphs G_{i,A,B}. Returns {}
/// when s and t are disconnected; throws when they are adjacent or the
/// minimum cut exceeds k.
VertexSet cover_minimal_separators(const ColoredGraph& g, int s, int t, int k);

/// G* of Theorem 2.15 for the terminal set t_set: the torso of g on
/// C' (union over separable terminal pairs) plus the terminals, with every
/// torso-created edge replaced by k+1 subdivision vertices. Pairs that are
/// adjacent or not separable within k contribute nothing.
ReductionResult reduce_terminals(const ColoredGraph& g, const VertexSet& t_set,
                                 int k);

/// Lemma 3.9: union of all minimal sets of size at most k separating the
/// vertex sets x and y, computed through super-terminals attached to x and
/// y. nullopt when x and y cannot be separated by at most k vertices.
std::optional<VertexSet> cover_set_separators(const ColoredGraph& g,
                                              const VertexSet& x,
                                              const VertexSet& y, int k);

/// Lemma 3.10 projections: v in C lies in X* iff some path joins v to a
/// vertex of x meeting C only at v (so x∩C is always included). Requires C
/// to separate x and y.
std::pair<VertexSet, VertexSet> project_terminals(const ColoredGraph& g,
                                                  const VertexSet& c,
                                                  const VertexSet& x,
                                                  const VertexSet& y);

/// Exactly the set C of vertices lying on some minimal s-t separator of
/// size at most k, decided vertex by vertex with the multicut-uncut solver.
VertexSet separator_membership(const ColoredGraph& g, int s, int t, int k);

}  // namespace sepred
