#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "sepred/graph.hpp"

namespace sepred {

/// Largest graph the canonicalizer accepts (K_MAX).
constexpr int kCanonMaxVertices = 16;

/// Canonical form of a small vertex-labeled graph: isomorphic inputs (label
/// preserving) produce identical values. Vertices appear in label order,
/// adjacency minimized lexicographically within label classes.
struct CanonicalGraph {
  uint8_t n = 0;
  std::array<uint16_t, kCanonMaxVertices> adj{};
  std::array<uint8_t, kCanonMaxVertices> label{};

  bool operator==(const CanonicalGraph& o) const {
    return n == o.n && adj == o.adj && label == o.label;
  }
};

struct CanonicalGraphHash {
  size_t operator()(const CanonicalGraph& g) const;
};

/// Canonicalizes g (all edges count; callers filter red edges beforehand
/// when a constraint is black-only). Throws if g has more than K_MAX
/// vertices.
CanonicalGraph canonicalize(const ColoredGraph& g);

/// Low-level form used by the DP: vertices carry arbitrary integer colors;
/// permutations may only reorder vertices of equal color. Returns adjacency
/// rows under the canonical permutation; the color sequence (sorted) is
/// implied by the input multiset.
std::array<uint16_t, kCanonMaxVertices> canonical_adjacency(
    int n, const std::array<uint16_t, kCanonMaxVertices>& adj,
    const std::array<int, kCanonMaxVertices>& color);

/// True iff the two graphs are isomorphic respecting vertex labels.
bool is_isomorphic(const ColoredGraph& a, const ColoredGraph& b);

/// All unlabeled simple graphs with exactly n vertices up to isomorphism.
/// Guarded at n <= 6 (enumeration is exponential).
std::vector<CanonicalGraph> all_graphs_on(int n);

/// All unlabeled simple graphs with 0..max_n vertices up to isomorphism.
std::vector<CanonicalGraph> all_graphs_up_to(int max_n);

/// Rebuilds a ColoredGraph (black edges, labels) from a canonical form.
ColoredGraph from_canonical(const CanonicalGraph& c);

}  // namespace sepred
