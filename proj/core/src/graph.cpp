#include "sepred/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace sepred {

void ColoredGraph::check_vertex(int v) const {
  if (v < 0 || v >= n()) throw std::invalid_argument("vertex id out of range");
}

void ColoredGraph::add_edge(int u, int v, EdgeColor color) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (has_edge(u, v)) throw std::invalid_argument("parallel edge");
  auto ins = [](std::vector<std::pair<int, EdgeColor>>& lst, int w,
                EdgeColor c) {
    auto it = std::lower_bound(
        lst.begin(), lst.end(), w,
        [](const std::pair<int, EdgeColor>& p, int x) { return p.first < x; });
    lst.insert(it, {w, c});
  };
  ins(adj_[u], v, color);
  ins(adj_[v], u, color);
  ++m_;
}

bool ColoredGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& lst = adj_[u];
  auto it = std::lower_bound(
      lst.begin(), lst.end(), v,
      [](const std::pair<int, EdgeColor>& p, int x) { return p.first < x; });
  return it != lst.end() && it->first == v;
}

bool ColoredGraph::has_black_edge(int u, int v) const {
  return has_edge(u, v) && edge_color(u, v) == EdgeColor::Black;
}

EdgeColor ColoredGraph::edge_color(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& lst = adj_[u];
  auto it = std::lower_bound(
      lst.begin(), lst.end(), v,
      [](const std::pair<int, EdgeColor>& p, int x) { return p.first < x; });
  if (it == lst.end() || it->first != v)
    throw std::invalid_argument("edge not in graph");
  return it->second;
}

void ColoredGraph::set_vertex_label(int v, int label) {
  check_vertex(v);
  label_[v] = label;
}

std::vector<std::tuple<int, int, EdgeColor>> ColoredGraph::edges() const {
  std::vector<std::tuple<int, int, EdgeColor>> out;
  out.reserve(m_);
  for (int u = 0; u < n(); ++u)
    for (const auto& [v, c] : adj_[u])
      if (u < v) out.emplace_back(u, v, c);
  return out;
}

namespace vset {

bool contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

VertexSet difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void insert(VertexSet& s, int v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) s.insert(it, v);
}

VertexSet sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace vset

std::vector<VertexSet> components_without(const ColoredGraph& g,
                                          const VertexSet& removed) {
  std::vector<char> gone(g.n(), 0);
  for (int v : removed) {
    g.check_vertex(v);
    gone[v] = 1;
  }
  std::vector<char> seen(g.n(), 0);
  std::vector<VertexSet> out;
  std::vector<int> stack;
  for (int r = 0; r < g.n(); ++r) {
    if (seen[r] || gone[r]) continue;
    VertexSet comp;
    stack.push_back(r);
    seen[r] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (const auto& [w, c] : g.neighbors(u)) {
        (void)c;
        if (!seen[w] && !gone[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const ColoredGraph& g) {
  return components_without(g, {});
}

VertexSet neighborhood(const ColoredGraph& g, const VertexSet& x) {
  std::vector<char> in(g.n(), 0);
  for (int v : x) {
    g.check_vertex(v);
    in[v] = 1;
  }
  VertexSet out;
  for (int v : x)
    for (const auto& [w, c] : g.neighbors(v)) {
      (void)c;
      if (!in[w]) out.push_back(w);
    }
  return vset::sorted_unique(std::move(out));
}

bool is_separator(const ColoredGraph& g, const VertexSet& s,
                  const VertexSet& a, const VertexSet& b) {
  for (int v : a) g.check_vertex(v);
  for (int v : b) g.check_vertex(v);
  auto comps = components_without(g, s);
  for (const auto& comp : comps) {
    bool has_a = !vset::intersect(comp, a).empty();
    bool has_b = !vset::intersect(comp, b).empty();
    if (has_a && has_b) return false;
  }
  return true;
}

bool black_connected(const ColoredGraph& g, const VertexSet& s) {
  if (s.size() <= 1) return true;
  std::vector<char> in(g.n(), 0);
  for (int v : s) {
    g.check_vertex(v);
    in[v] = 1;
  }
  std::vector<int> stack{s[0]};
  std::vector<char> seen(g.n(), 0);
  seen[s[0]] = 1;
  size_t cnt = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const auto& [w, c] : g.neighbors(u))
      if (c == EdgeColor::Black && in[w] && !seen[w]) {
        seen[w] = 1;
        ++cnt;
        stack.push_back(w);
      }
  }
  return cnt == s.size();
}

std::optional<TwoColoring> bipartite_2coloring(const ColoredGraph& g) {
  std::vector<int> side(g.n(), -1);
  std::queue<int> q;
  for (int r = 0; r < g.n(); ++r) {
    if (side[r] != -1) continue;
    side[r] = 0;
    q.push(r);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const auto& [w, c] : g.neighbors(u)) {
        if (c != EdgeColor::Black) continue;
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          q.push(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  TwoColoring out;
  for (int v = 0; v < g.n(); ++v)
    (side[v] == 0 ? out.b_side : out.w_side).push_back(v);
  return out;
}

bool is_black_bipartite(const ColoredGraph& g) {
  return bipartite_2coloring(g).has_value();
}

InducedSubgraph induced_subgraph(const ColoredGraph& g,
                                 const VertexSet& verts) {
  InducedSubgraph out;
  out.origin = verts;
  std::vector<int> idx(g.n(), -1);
  for (size_t i = 0; i < verts.size(); ++i) {
    g.check_vertex(verts[i]);
    idx[verts[i]] = static_cast<int>(i);
  }
  out.graph = ColoredGraph(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    out.graph.set_vertex_label(static_cast<int>(i),
                               g.vertex_label(verts[i]));
  for (int u : verts)
    for (const auto& [w, c] : g.neighbors(u))
      if (u < w && idx[w] != -1) out.graph.add_edge(idx[u], idx[w], c);
  return out;
}

Contraction contract_edges(const ColoredGraph& g,
                           const std::vector<std::pair<int, int>>& f) {
  std::vector<int> parent(g.n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (const auto& [u, v] : f) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge not in graph");
    int ru = find(u), rv = find(v);
    if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
  }
  // classes renumbered by smallest original member
  std::vector<int> root_min(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    int r = find(v);
    if (root_min[r] == -1) root_min[r] = v;
  }
  std::vector<int> roots;
  for (int v = 0; v < g.n(); ++v)
    if (find(v) == v) roots.push_back(root_min[v]);
  std::sort(roots.begin(), roots.end());
  std::vector<int> new_id_of_min(g.n(), -1);
  for (size_t i = 0; i < roots.size(); ++i)
    new_id_of_min[roots[i]] = static_cast<int>(i);

  Contraction out;
  out.class_of.resize(g.n());
  for (int v = 0; v < g.n(); ++v)
    out.class_of[v] = new_id_of_min[root_min[find(v)]];

  // Dedupe parallel edges; a black parallel dominates a red one.
  std::map<std::pair<int, int>, EdgeColor> merged;
  for (const auto& [u, v, c] : g.edges()) {
    int a = out.class_of[u], b = out.class_of[v];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    auto [it, fresh] = merged.try_emplace({a, b}, c);
    if (!fresh && c == EdgeColor::Black) it->second = EdgeColor::Black;
  }
  out.graph = ColoredGraph(static_cast<int>(roots.size()));
  for (const auto& [e, c] : merged) out.graph.add_edge(e.first, e.second, c);
  return out;
}

}  // namespace sepred
