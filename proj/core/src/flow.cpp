#include "sepred/flow.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace sepred {

VertexSet SeparatorChain::x(int i) const {
  VertexSet out;
  for (int j = 0; j < i && j < q(); ++j) out = vset::unite(out, diffs[j]);
  return out;
}

namespace {

// Split network of Lemma 2.4: nodes in(v)=2v, out(v)=2v+1; a unit arc
// in(v)->out(v); unbounded arcs out(v)->in(v) and, per edge xy,
// out(x)->in(y) and out(y)->in(x). Unbounded capacity is a marker, not a
// big number; every augmenting path bottlenecks on a unit arc.
struct SplitNetwork {
  struct Arc {
    int to;
    int rem;  // remaining capacity when bounded
    bool unbounded;
  };

  int n;
  std::vector<Arc> arcs;               // arc i^1 is the reverse of arc i
  std::vector<std::vector<int>> head;  // per node, arc ids sorted by target

  explicit SplitNetwork(const ColoredGraph& g) : n(g.n()), head(2 * g.n()) {
    for (int v = 0; v < n; ++v) {
      add(in(v), out(v), 1, false);
      add(out(v), in(v), 0, true);
    }
    for (const auto& [x, y, c] : g.edges()) {
      (void)c;
      add(out(x), in(y), 0, true);
      add(out(y), in(x), 0, true);
    }
    for (auto& lst : head)
      std::sort(lst.begin(), lst.end(), [this](int a, int b) {
        if (arcs[a].to != arcs[b].to) return arcs[a].to < arcs[b].to;
        return a < b;
      });
  }

  static int in(int v) { return 2 * v; }
  static int out(int v) { return 2 * v + 1; }

  void add(int u, int v, int cap, bool unbounded) {
    head[u].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({v, cap, unbounded});
    head[v].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({u, 0, false});
  }

  bool residual(int i) const {
    return arcs[i].unbounded || arcs[i].rem > 0;
  }

  void push(int i) {
    if (!arcs[i].unbounded) arcs[i].rem -= 1;
    if (!arcs[i ^ 1].unbounded) arcs[i ^ 1].rem += 1;
  }

  // Shortest augmenting path by BFS, neighbors visited in increasing node
  // order. Returns parent arc ids or an empty vector when the sink is
  // unreachable.
  std::vector<int> bfs_path(int s, int t) const {
    std::vector<int> parent_arc(2 * n, -1);
    std::vector<char> seen(2 * n, 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (u == t) break;
      for (int id : head[u]) {
        if (!residual(id)) continue;
        int w = arcs[id].to;
        if (seen[w]) continue;
        seen[w] = 1;
        parent_arc[w] = id;
        q.push(w);
      }
    }
    if (!seen[t]) return {};
    return parent_arc;
  }

  // arc id -> tail node (the paired reverse arc points back at it)
  int tail(int id) const { return arcs[id ^ 1].to; }

  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(2 * n, 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int id : head[u]) {
        if (!residual(id)) continue;
        int w = arcs[id].to;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }
};

// Runs augmentations until the minimum cut is established or more than
// `bound` units would be needed. Returns the flow value, or -1 when the
// min cut exceeds bound.
int augment_up_to(SplitNetwork& net, int s, int t, int bound) {
  int flow = 0;
  while (true) {
    auto parent = net.bfs_path(s, t);
    if (parent.empty()) return flow;
    if (flow == bound) return -1;
    for (int u = t; u != s;) {
      int id = parent[u];
      net.push(id);
      u = net.tail(id);
    }
    ++flow;
  }
}

VertexSet cut_from_reachability(const SplitNetwork& net,
                                const std::vector<char>& reach) {
  VertexSet sep;
  for (int v = 0; v < net.n; ++v)
    if (reach[SplitNetwork::in(v)] && !reach[SplitNetwork::out(v)])
      sep.push_back(v);
  return sep;
}

// Iterative Tarjan over the residual graph; comp ids are assigned in
// completion order, which is reverse topological order of the condensation.
struct ResidualScc {
  const SplitNetwork& net;
  std::vector<int> comp, low, num, arc_pos;
  std::vector<int> stack, call;
  std::vector<char> on_stack;
  int counter = 0, ncomp = 0;

  explicit ResidualScc(const SplitNetwork& net_)
      : net(net_),
        comp(2 * net_.n, -1),
        low(2 * net_.n, 0),
        num(2 * net_.n, -1),
        arc_pos(2 * net_.n, 0),
        on_stack(2 * net_.n, 0) {
    for (int v = 0; v < 2 * net.n; ++v)
      if (num[v] == -1) run(v);
  }

  void run(int root) {
    call.push_back(root);
    while (!call.empty()) {
      int u = call.back();
      if (num[u] == -1) {
        num[u] = low[u] = counter++;
        stack.push_back(u);
        on_stack[u] = 1;
      }
      bool descended = false;
      auto& pos = arc_pos[u];
      const auto& lst = net.head[u];
      while (pos < static_cast<int>(lst.size())) {
        int id = lst[pos];
        ++pos;
        if (!net.residual(id)) continue;
        int w = net.arcs[id].to;
        if (num[w] == -1) {
          call.push_back(w);
          descended = true;
          break;
        }
        if (on_stack[w]) low[u] = std::min(low[u], num[w]);
      }
      if (descended) continue;
      call.pop_back();
      if (!call.empty()) {
        int p = call.back();
        low[p] = std::min(low[p], low[u]);
      }
      if (low[u] == num[u]) {
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = ncomp;
          if (w == u) break;
        }
        ++ncomp;
      }
    }
  }

  // topo index: arcs of the condensation go from smaller to larger index
  int topo(int node) const { return ncomp - 1 - comp[node]; }
};

}  // namespace

std::optional<std::pair<int, VertexSet>> min_vertex_cut(const ColoredGraph& g,
                                                        int s, int t, int k) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) throw std::invalid_argument("s and t must differ");
  if (k < 0) return std::nullopt;
  if (g.has_edge(s, t)) return std::nullopt;  // minimum size is infinite
  SplitNetwork net(g);
  int flow = augment_up_to(net, SplitNetwork::out(s), SplitNetwork::in(t), k);
  if (flow < 0) return std::nullopt;
  auto reach = net.residual_reachable(SplitNetwork::out(s));
  return std::make_pair(flow, cut_from_reachability(net, reach));
}

SeparatorChain separator_chain(const ColoredGraph& g, int s, int t) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) throw std::invalid_argument("s and t must differ");
  if (g.has_edge(s, t))
    throw std::invalid_argument("s and t are adjacent: no separator exists");
  SplitNetwork net(g);
  int ell = augment_up_to(net, SplitNetwork::out(s), SplitNetwork::in(t),
                          2 * g.n());
  if (ell <= 0)
    throw std::invalid_argument("s and t are disconnected: chain undefined");

  ResidualScc scc(net);
  int x = scc.topo(SplitNetwork::in(t));
  int y = scc.topo(SplitNetwork::out(s));
  assert(x < y);

  // v is fully inside Y_i iff min(topo(in), topo(out)) >= i; v is in
  // N(X_i) = S_i iff topo(out) < i <= topo(in).
  SeparatorChain chain;
  chain.ell = ell;
  std::vector<std::vector<int>> diff_bucket(y + 2), sep_bucket(y + 2);
  for (int v = 0; v < g.n(); ++v) {
    int ti = scc.topo(SplitNetwork::in(v));
    int to = scc.topo(SplitNetwork::out(v));
    int tmin = std::min(ti, to);
    // thresholds walked from i=y (innermost X) down to x+1 (outermost)
    if (tmin >= x + 1) diff_bucket[std::min(tmin, y)].push_back(v);
    for (int i = std::max(x + 1, to + 1); i <= std::min(y, ti); ++i)
      sep_bucket[i].push_back(v);
  }
  for (int i = y; i >= x + 1; --i) {
    auto diff = vset::sorted_unique(diff_bucket[i]);
    if (i < y && diff.empty()) continue;  // X_i equals the previous set
    chain.diffs.push_back(diff);
    chain.separators.push_back(vset::sorted_unique(sep_bucket[i]));
  }
  assert(!chain.diffs.empty() && vset::contains(chain.diffs[0], s));
  return chain;
}

}  // namespace sepred
