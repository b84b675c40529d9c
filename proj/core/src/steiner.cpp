#include <algorithm>
#include <stdexcept>

#include "sepred/cutsolvers.hpp"

namespace sepred {

namespace {

// (vertex count, lexicographically smallest set) ordering on candidate
// connected sets
bool set_better(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::optional<VertexSet> steiner_tree_bounded(const ColoredGraph& g,
                                              const VertexSet& x, int k) {
  if (static_cast<int>(x.size()) > k) return std::nullopt;
  for (int v : x) g.check_vertex(v);
  if (x.empty()) return VertexSet{};
  int t = static_cast<int>(x.size());
  if (t > 16) throw std::invalid_argument("too many terminals");

  // dp[mask][v]: best vertex set of a connected subgraph containing
  // {x_i : i in mask} and v, capped at k vertices. States relaxed to a
  // fixpoint: grow by a neighbor or merge two subtrees at v.
  int full = (1 << t) - 1;
  std::vector<std::vector<VertexSet>> dp(
      full + 1, std::vector<VertexSet>(g.n()));
  std::vector<std::vector<char>> has(full + 1,
                                     std::vector<char>(g.n(), 0));

  auto offer = [&](int mask, int v, const VertexSet& cand) {
    if (static_cast<int>(cand.size()) > k) return false;
    if (!has[mask][v] || set_better(cand, dp[mask][v])) {
      dp[mask][v] = cand;
      has[mask][v] = 1;
      return true;
    }
    return false;
  };

  for (int i = 0; i < t; ++i) offer(1 << i, x[i], {x[i]});
  for (int v = 0; v < g.n(); ++v) {
    int mask = 0;
    for (int i = 0; i < t; ++i)
      if (x[i] == v) mask |= (1 << i);
    if (mask == 0) offer(0, v, {v});
  }

  for (int mask = 0; mask <= full; ++mask) {
    // merge submasks that share v
    for (int sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
      int other = mask ^ sub;
      for (int v = 0; v < g.n(); ++v) {
        if (!has[sub][v] || !has[other][v]) continue;
        VertexSet cand = vset::unite(dp[sub][v], dp[other][v]);
        offer(mask, v, cand);
      }
    }
    // grow along edges until stable
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < g.n(); ++v) {
        if (!has[mask][v]) continue;
        for (const auto& [w, c] : g.neighbors(v)) {
          (void)c;
          VertexSet cand = dp[mask][v];
          vset::insert(cand, w);
          int wmask = mask;
          for (int i = 0; i < t; ++i)
            if (x[i] == w) wmask |= (1 << i);
          if (wmask == mask) {
            if (offer(mask, w, cand)) changed = true;
          } else {
            // terminal absorbed; the larger mask picks this up later
            offer(wmask | mask, w, cand);
          }
        }
      }
    }
  }

  std::optional<VertexSet> best;
  for (int v = 0; v < g.n(); ++v)
    if (has[full][v] && (!best || set_better(dp[full][v], *best)))
      best = dp[full][v];
  return best;
}

}  // namespace sepred
