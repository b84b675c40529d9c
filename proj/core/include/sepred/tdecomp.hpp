#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sepred/graph.hpp"

namespace sepred {

/// Tree decomposition: bags over a tree. Valid iff (1) bags cover all
/// vertices, (2) every edge lies inside some bag, (3) per vertex, the nodes
/// whose bags contain it form a subtree.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;  // tree edges between bag ids

  int width() const;
};

/// nullopt when valid; otherwise names the violated condition.
std::optional<std::string> validate(const ColoredGraph& g,
                                    const TreeDecomposition& td);

/// Min-fill elimination ordering heuristic; ties broken by lowest vertex id.
/// Always valid; width >= tw(g) with no optimality claim.
TreeDecomposition decompose(const ColoredGraph& g);

/// Rooted normalized decomposition for DP. Join children share the node's
/// bag; introduce/forget change the bag by one vertex; the root bag is
/// empty.
struct NiceDecomposition {
  enum class Kind : uint8_t { Leaf, Introduce, Forget, Join };
  struct Node {
    Kind kind;
    int vertex = -1;  // introduced/forgotten vertex
    VertexSet bag;
    int child0 = -1;
    int child1 = -1;
  };
  std::vector<Node> nodes;
  int root = -1;

  int width() const;
};

/// Preserves width and validity.
NiceDecomposition make_nice(const TreeDecomposition& td);

std::optional<std::string> validate_nice(const ColoredGraph& g,
                                         const NiceDecomposition& nice);

/// PACE-style .td text format: `s td <#bags> <width+1> <n>`, `b <id> <v...>`
/// (1-based), then tree edge lines.
void write_td(std::ostream& out, const TreeDecomposition& td, int n);
TreeDecomposition read_td(std::istream& in);
std::string format_td(const TreeDecomposition& td, int n);

}  // namespace sepred
