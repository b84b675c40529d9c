#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sepred/graph.hpp"

namespace sepred {

/// The noncrossing chain of minimum s-t separators: nested sets
/// X_1 c X_2 c ... c X_q stored as successive differences, with
/// S_i = N(X_i) of size ell each. Every minimum s-t separator is contained
/// in the union of the S_i.
struct SeparatorChain {
  int ell = 0;                         // minimum separator size
  std::vector<VertexSet> diffs;        // X_1, X_2\X_1, ..., X_q\X_{q-1}
  std::vector<VertexSet> separators;   // S_1..S_q

  int q() const { return static_cast<int>(diffs.size()); }
  /// X_i reconstructed from the differences (1-based i).
  VertexSet x(int i) const;
};

/// Minimum s-t vertex cut of size at most k, found with at most k+1 rounds
/// of augmentation on the unit-capacity split network. Returns the cut size
/// and one minimum separator (the saturated split arcs on the residual
/// reachability boundary), or nullopt when the minimum cut exceeds k or s
/// and t are adjacent (no separator exists at all). Size 0 with an empty
/// separator means s and t are already disconnected.
std::optional<std::pair<int, VertexSet>> min_vertex_cut(const ColoredGraph& g,
                                                        int s, int t, int k);

/// Chain of Lemma 2.4 built from the strongly connected components of the
/// residual network in topological order. Requires s != t, s and t
/// nonadjacent and connected (ell >= 1).
SeparatorChain separator_chain(const ColoredGraph& g, int s, int t);

}  // namespace sepred
