#include "sepred/matching.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace sepred {

namespace {

// branch on the lowest-id vertex with any incident edge: either unmatched or
// matched to one of its neighbors
int mm_rec(const ColoredGraph& g, uint32_t alive,
           std::vector<std::pair<int, int>>& cur,
           std::vector<std::pair<int, int>>& best) {
  int v = -1;
  for (int u = 0; u < g.n(); ++u) {
    if (!(alive & (1u << u))) continue;
    bool has = false;
    for (const auto& [w, c] : g.neighbors(u)) {
      (void)c;
      if (alive & (1u << w)) {
        has = true;
        break;
      }
    }
    if (has) {
      v = u;
      break;
    }
  }
  if (v == -1) {
    if (cur.size() > best.size()) best = cur;
    return static_cast<int>(cur.size());
  }
  int res = mm_rec(g, alive & ~(1u << v), cur, best);
  for (const auto& [w, c] : g.neighbors(v)) {
    (void)c;
    if (!(alive & (1u << w))) continue;
    cur.emplace_back(v, w);
    res = std::max(res,
                   1 + mm_rec(g, alive & ~(1u << v) & ~(1u << w), cur, best));
    cur.pop_back();
  }
  return res;
}

}  // namespace

std::vector<std::pair<int, int>> max_matching_small(const ColoredGraph& g) {
  if (g.n() > 20)
    throw std::invalid_argument("graph too large for max_matching_small");
  std::vector<std::pair<int, int>> cur, best;
  mm_rec(g, (1u << g.n()) - 1, cur, best);
  return best;
}

int matching_number_small(const ColoredGraph& g) {
  return static_cast<int>(max_matching_small(g).size());
}

std::vector<std::pair<int, int>> max_matching_bipartite(const ColoredGraph& g) {
  auto coloring = bipartite_2coloring(g);
  if (!coloring) throw std::invalid_argument("graph is not bipartite");
  const VertexSet& left = coloring->b_side;
  std::vector<int> match(g.n(), -1);
  std::vector<char> visited(g.n());
  // black edges only: bipartition is of the black subgraph
  std::function<bool(int)> augment = [&](int u) -> bool {
    for (const auto& [w, c] : g.neighbors(u)) {
      if (c != EdgeColor::Black || visited[w]) continue;
      visited[w] = 1;
      if (match[w] == -1 || augment(match[w])) {
        match[w] = u;
        match[u] = w;
        return true;
      }
    }
    return false;
  };
  for (int u : left) {
    if (match[u] != -1) continue;
    std::fill(visited.begin(), visited.end(), 0);
    augment(u);
  }
  std::vector<std::pair<int, int>> out;
  for (int u : left)
    if (match[u] != -1) out.emplace_back(u, match[u]);
  return out;
}

VertexSet max_independent_set_bipartite(const ColoredGraph& g) {
  auto coloring = bipartite_2coloring(g);
  if (!coloring) throw std::invalid_argument("graph is not bipartite");
  const VertexSet& left = coloring->b_side;
  const VertexSet& right = coloring->w_side;
  std::vector<int> match(g.n(), -1);
  for (const auto& [u, w] : max_matching_bipartite(g)) {
    match[u] = w;
    match[w] = u;
  }
  // Konig: Z = unmatched left vertices plus alternating reachability;
  // min cover = (L \ Z) + (R ∩ Z); independent set = complement.
  std::vector<char> in_left(g.n(), 0);
  for (int u : left) in_left[u] = 1;
  std::vector<char> z(g.n(), 0);
  std::vector<int> stack;
  for (int u : left)
    if (match[u] == -1) {
      z[u] = 1;
      stack.push_back(u);
    }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (in_left[u]) {
      for (const auto& [w, c] : g.neighbors(u)) {
        if (c != EdgeColor::Black) continue;
        if (!z[w] && match[u] != w) {
          z[w] = 1;
          stack.push_back(w);
        }
      }
    } else if (match[u] != -1 && !z[match[u]]) {
      z[match[u]] = 1;
      stack.push_back(match[u]);
    }
  }
  VertexSet out;
  for (int u : left)
    if (z[u]) out.push_back(u);
  for (int w : right)
    if (!z[w]) out.push_back(w);
  return vset::sorted_unique(std::move(out));
}

}  // namespace sepred
