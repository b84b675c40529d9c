#include "sepred/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sepred {

size_t CanonicalGraphHash::operator()(const CanonicalGraph& g) const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(g.n);
  for (int i = 0; i < g.n; ++i) {
    mix(g.adj[i]);
    mix(g.label[i]);
  }
  return static_cast<size_t>(h);
}

namespace {

// Iterated color refinement: new color = (old color, sorted neighbor
// colors). Sound for label-preserving isomorphism and only ever splits the
// original classes.
void refine_colors(int n, const std::array<uint16_t, kCanonMaxVertices>& adj,
                   std::array<int, kCanonMaxVertices>& color) {
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if (adj[v] & (1u << u)) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      nb.insert(nb.begin(), color[v]);
      sig[v] = {std::move(nb), v};
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s.first, 0);
    int next = 0;
    for (auto& [k, r] : rank) r = next++;
    bool changed = false;
    for (int v = 0; v < n; ++v) {
      int c = rank[sig[v].first];
      if (c != color[v]) changed = true;
      color[v] = c;
    }
    if (!changed) break;
  }
}

struct CanonSearch {
  int n;
  const std::array<uint16_t, kCanonMaxVertices>* adj;
  std::vector<std::vector<int>> slot_candidates;  // per position
  std::array<int, kCanonMaxVertices> placed{};    // position -> vertex
  std::array<uint16_t, kCanonMaxVertices> rows{};
  std::array<uint16_t, kCanonMaxVertices> best{};
  bool have_best = false;
  uint16_t used = 0;

  // rows[0..pos] compared to best[0..pos]; <0 smaller, 0 equal, >0 larger.
  int prefix_cmp(int pos) const {
    for (int j = 0; j <= pos; ++j) {
      if (rows[j] != best[j]) return rows[j] < best[j] ? -1 : 1;
    }
    return 0;
  }

  void dfs(int pos) {
    if (pos == n) {
      if (!have_best || prefix_cmp(n - 1) < 0) {
        best = rows;
        have_best = true;
      }
      return;
    }
    for (int v : slot_candidates[pos]) {
      if (used & (1u << v)) continue;
      uint16_t bits = 0;
      for (int j = 0; j < pos; ++j)
        if ((*adj)[v] & (1u << placed[j])) bits |= (1u << j);
      rows[pos] = bits;
      if (have_best && prefix_cmp(pos) > 0) continue;
      placed[pos] = v;
      used |= (1u << v);
      dfs(pos + 1);
      used &= ~(1u << v);
    }
  }
};

}  // namespace

std::array<uint16_t, kCanonMaxVertices> canonical_adjacency(
    int n, const std::array<uint16_t, kCanonMaxVertices>& adj,
    const std::array<int, kCanonMaxVertices>& color) {
  if (n < 0 || n > kCanonMaxVertices)
    throw std::invalid_argument("too many vertices for canonical form");
  std::array<int, kCanonMaxVertices> refined = color;
  refine_colors(n, adj, refined);

  // position p gets the p-th smallest refined color; candidates share it
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (refined[a] != refined[b]) return refined[a] < refined[b];
    return a < b;
  });

  CanonSearch s;
  s.n = n;
  s.adj = &adj;
  s.slot_candidates.resize(n);
  for (int p = 0; p < n; ++p) {
    for (int v = 0; v < n; ++v)
      if (refined[v] == refined[order[p]]) s.slot_candidates[p].push_back(v);
  }
  s.dfs(0);
  // the search works on lower-triangular rows; emit the symmetric matrix
  std::array<uint16_t, kCanonMaxVertices> full{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (s.best[i] & (1u << j)) {
        full[i] |= static_cast<uint16_t>(1u << j);
        full[j] |= static_cast<uint16_t>(1u << i);
      }
  return full;
}

CanonicalGraph canonicalize(const ColoredGraph& g) {
  if (g.n() > kCanonMaxVertices)
    throw std::invalid_argument("too many vertices for canonical form");
  int n = g.n();
  std::array<uint16_t, kCanonMaxVertices> adj{};
  std::array<int, kCanonMaxVertices> color{};
  for (int v = 0; v < n; ++v) color[v] = g.vertex_label(v);
  for (const auto& [u, v, c] : g.edges()) {
    (void)c;
    adj[u] |= (1u << v);
    adj[v] |= (1u << u);
  }

  CanonicalGraph out;
  out.n = static_cast<uint8_t>(n);
  out.adj = canonical_adjacency(n, adj, color);
  // Refinement only splits label classes and keeps their order, so canonical
  // positions carry the labels in ascending order.
  std::vector<int> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = g.vertex_label(v);
  std::sort(labels.begin(), labels.end());
  for (int i = 0; i < n; ++i) out.label[i] = static_cast<uint8_t>(labels[i]);
  return out;
}

bool is_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  return canonicalize(a) == canonicalize(b);
}

std::vector<CanonicalGraph> all_graphs_on(int n) {
  if (n < 0 || n > 6)
    throw std::invalid_argument("graph enumeration limited to 6 vertices");
  std::vector<CanonicalGraph> out;
  if (n == 0) {
    out.push_back(CanonicalGraph{});
    return out;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<CanonicalGraph> seen;
  for (uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    ColoredGraph g(n);
    for (size_t i = 0; i < pairs.size(); ++i)
      if (mask & (1u << i)) g.add_edge(pairs[i].first, pairs[i].second);
    CanonicalGraph c = canonicalize(g);
    bool fresh = true;
    for (const auto& s : seen)
      if (s == c) {
        fresh = false;
        break;
      }
    if (fresh) seen.push_back(c);
  }
  return seen;
}

std::vector<CanonicalGraph> all_graphs_up_to(int max_n) {
  std::vector<CanonicalGraph> out;
  for (int n = 0; n <= max_n; ++n) {
    auto batch = all_graphs_on(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

ColoredGraph from_canonical(const CanonicalGraph& c) {
  ColoredGraph g(c.n);
  for (int v = 0; v < c.n; ++v) g.set_vertex_label(v, c.label[v]);
  for (int u = 0; u < c.n; ++u)
    for (int v = u + 1; v < c.n; ++v)
      if (c.adj[u] & (1u << v)) g.add_edge(u, v);
  return g;
}

}  // namespace sepred
