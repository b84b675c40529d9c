#include <stdexcept>

#include "sepred/cutsolvers.hpp"
#include "sepred/twreduce.hpp"

namespace sepred {

// A vertex v lies on a minimal s-t separator of size at most k iff some S
// of size at most k-1 separates s and t in g \ v while leaving s connected
// to a neighbor of v and t connected to another. The existential choice of
// neighbors is exactly set-pair non-separation, so one multicut-uncut call
// per vertex decides membership.
VertexSet separator_membership(const ColoredGraph& g, int s, int t, int k) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) throw std::invalid_argument("s and t must differ");
  VertexSet out;
  if (k <= 0) return out;
  for (int v = 0; v < g.n(); ++v) {
    if (v == s || v == t) continue;
    VertexSet nb;
    for (const auto& [w, c] : g.neighbors(v)) {
      (void)c;
      nb.push_back(w);
    }
    if (nb.empty()) continue;
    VertexSet keep;
    for (int u = 0; u < g.n(); ++u)
      if (u != v) keep.push_back(u);
    auto sub = induced_subgraph(g, keep);
    std::vector<int> local(g.n(), -1);
    for (size_t i = 0; i < sub.origin.size(); ++i)
      local[sub.origin[i]] = static_cast<int>(i);
    VertexSet nb_local;
    for (int w : nb) nb_local.push_back(local[w]);
    nb_local = vset::sorted_unique(std::move(nb_local));
    auto res = multicut_uncut(
        sub.graph, {{{local[s]}, {local[t]}}},
        {{{local[s]}, nb_local}, {{local[t]}, nb_local}}, k - 1,
        ConstraintSpec::any());
    if (res) out.push_back(v);
  }
  return out;
}

}  // namespace sepred
