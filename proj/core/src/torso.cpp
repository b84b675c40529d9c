#include "sepred/torso.hpp"

namespace sepred {

TorsoResult torso(const ColoredGraph& g, const VertexSet& c) {
  TorsoResult out;
  out.origin = c;
  std::vector<int> idx(g.n(), -1);
  for (size_t i = 0; i < c.size(); ++i) {
    g.check_vertex(c[i]);
    idx[c[i]] = static_cast<int>(i);
  }
  out.graph = ColoredGraph(static_cast<int>(c.size()));
  for (size_t i = 0; i < c.size(); ++i)
    out.graph.set_vertex_label(static_cast<int>(i), g.vertex_label(c[i]));

  // original edges inside c keep their color
  for (int u : c)
    for (const auto& [w, color] : g.neighbors(u))
      if (u < w && idx[w] != -1) out.graph.add_edge(idx[u], idx[w], color);

  // each component K of g\c contributes a clique on N(K); a path through K
  // is what Def 2.5 asks for, and the clique is exactly its trace on c
  for (const auto& comp : components_without(g, c)) {
    VertexSet nb = neighborhood(g, comp);
    for (size_t a = 0; a < nb.size(); ++a)
      for (size_t b = a + 1; b < nb.size(); ++b) {
        int ia = idx[nb[a]], ib = idx[nb[b]];
        if (!out.graph.has_edge(ia, ib))
          out.graph.add_edge(ia, ib, EdgeColor::Red);
      }
  }
  return out;
}

}  // namespace sepred
