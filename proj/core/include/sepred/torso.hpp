#pragma once

#include "sepred/graph.hpp"

namespace sepred {

/// torso(g, c): graph on c where a and b are adjacent iff ab is an edge of g
/// or some g-path joins them with all internal vertices outside c. Edges of
/// g keep their color; new edges are red. Vertex i of the result is
/// origin[i], the i-th smallest member of c.
struct TorsoResult {
  ColoredGraph graph;
  VertexSet origin;
};

TorsoResult torso(const ColoredGraph& g, const VertexSet& c);

}  // namespace sepred
