#include "sepred/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace sepred::oracle {

namespace {

constexpr long kSubsetCap = 5'000'000;

// visits subsets of `universe` in (size, lexicographic) order; stops when f
// returns true, returning that subset
template <typename F>
std::optional<VertexSet> first_subset(const VertexSet& universe, int max_size,
                                      int min_size, F&& f) {
  int n = static_cast<int>(universe.size());
  {
    double total = 0, binom = 1;
    for (int i = 0; i <= std::min(max_size, n); ++i) {
      if (i >= min_size) total += binom;
      binom = binom * (n - i) / (i + 1);
      if (total > static_cast<double>(kSubsetCap))
        throw std::invalid_argument("instance too large for brute force");
    }
  }
  long visited = 0;
  for (int sz = min_size; sz <= std::min(max_size, n); ++sz) {
    std::vector<int> idx(sz);
    for (int i = 0; i < sz; ++i) idx[i] = i;
    while (true) {
      if (++visited > kSubsetCap)
        throw std::invalid_argument("instance too large for brute force");
      VertexSet s(sz);
      for (int i = 0; i < sz; ++i) s[i] = universe[idx[i]];
      if (f(s)) return s;
      // next combination
      int i = sz - 1;
      while (i >= 0 && idx[i] == n - sz + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

bool spec_accepts(const ColoredGraph& g, const ConstraintSpec& spec,
                  const VertexSet& s) {
  switch (spec.kind()) {
    case SpecKind::Any:
      return true;
    case SpecKind::ConnectedBlack:
      return black_connected(g, s);
    case SpecKind::Hereditary: {
      ColoredGraph sub = induced_subgraph(g, s).graph;
      ColoredGraph black(sub.n());
      for (int v = 0; v < sub.n(); ++v)
        black.set_vertex_label(v, sub.vertex_label(v));
      for (const auto& [u, v, c] : sub.edges())
        if (c == EdgeColor::Black) black.add_edge(u, v);
      return spec.contains(canonicalize(black));
    }
  }
  return false;
}

}  // namespace

std::optional<VertexSet> brute_constrained_cut(const ColoredGraph& g,
                                               const SeparationDemand& demand,
                                               int k,
                                               const ConstraintSpec& spec,
                                               const VertexSet& forbidden) {
  VertexSet universe;
  for (int v = 0; v < g.n(); ++v)
    if (!vset::contains(forbidden, v)) universe.push_back(v);
  return first_subset(universe, k, 0, [&](const VertexSet& s) {
    for (const auto& [x, y] : demand.cut_pairs)
      if (!is_separator(g, s, x, y)) return false;
    for (const auto& [x, y] : demand.uncut_pairs)
      if (is_separator(g, s, x, y)) return false;
    return spec_accepts(g, spec, s);
  });
}

VertexSet brute_minimal_separator_union(const ColoredGraph& g, int s, int t,
                                        int k) {
  VertexSet universe;
  for (int v = 0; v < g.n(); ++v)
    if (v != s && v != t) universe.push_back(v);
  VertexSet out;
  first_subset(universe, k, 0, [&](const VertexSet& sep) {
    if (!is_separator(g, sep, {s}, {t})) return false;
    for (int v : sep)
      if (is_separator(g, vset::difference(sep, {v}), {s}, {t})) return false;
    out = vset::unite(out, sep);
    return false;  // keep enumerating
  });
  return out;
}

std::optional<int> brute_min_separator_size(const ColoredGraph& g, int s,
                                            int t, int k) {
  VertexSet universe;
  for (int v = 0; v < g.n(); ++v)
    if (v != s && v != t) universe.push_back(v);
  auto res = first_subset(universe, k, 0, [&](const VertexSet& sep) {
    return is_separator(g, sep, {s}, {t});
  });
  if (!res) return std::nullopt;
  return static_cast<int>(res->size());
}

std::optional<VertexSet> brute_bipartization(
    const ColoredGraph& g, int k,
    const std::function<bool(const ColoredGraph&)>& class_member, bool exact) {
  VertexSet universe;
  for (int v = 0; v < g.n(); ++v) universe.push_back(v);
  return first_subset(universe, k, exact ? k : 0, [&](const VertexSet& s) {
    VertexSet rest = vset::difference(universe, s);
    if (!is_black_bipartite(induced_subgraph(g, rest).graph)) return false;
    return class_member(induced_subgraph(g, s).graph);
  });
}

std::optional<Coloring> brute_hck(const ColoredGraph& g,
                                  const HomTarget& target,
                                  const ListAssignment& lists,
                                  bool minimize_exceptional) {
  int n = g.n();
  if (static_cast<int>(lists.size()) != n)
    throw std::invalid_argument("list assignment size mismatch");
  std::vector<int> theta(n, -1);
  std::vector<int> used(target.h_n, 0);
  std::optional<Coloring> best;
  long visited = 0;

  std::function<void(int, int)> rec = [&](int v, int exceptional) {
    if (++visited > kSubsetCap)
      throw std::invalid_argument("instance too large for brute force");
    if (best && !minimize_exceptional) return;
    if (v == n) {
      Coloring c;
      c.theta = theta;
      for (int u = 0; u < n; ++u)
        if (vset::contains(target.c, theta[u])) c.exceptional.push_back(u);
      if (!best ||
          (minimize_exceptional &&
           c.exceptional.size() < best->exceptional.size()))
        best = c;
      return;
    }
    for (int color : lists[v]) {
      bool ok = true;
      for (const auto& [w, ec] : g.neighbors(v)) {
        if (ec != EdgeColor::Black) continue;
        if (w < v && !target.adjacent(theta[w], color)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      bool is_c = vset::contains(target.c, color);
      if (is_c && used[color] >= target.cap(color)) continue;
      theta[v] = color;
      if (is_c) ++used[color];
      rec(v + 1, exceptional + (is_c ? 1 : 0));
      if (is_c) --used[color];
      theta[v] = -1;
    }
  };
  rec(0, 0);
  return best;
}

std::optional<std::vector<std::pair<int, int>>> brute_contraction(
    const ColoredGraph& g, int k) {
  auto all = g.edges();
  std::vector<std::pair<int, int>> edge_list;
  for (const auto& [u, v, c] : all) {
    (void)c;
    edge_list.emplace_back(u, v);
  }
  int m = static_cast<int>(edge_list.size());
  VertexSet universe;
  for (int i = 0; i < m; ++i) universe.push_back(i);
  auto hit = first_subset(universe, k, 0, [&](const VertexSet& idxs) {
    std::vector<std::pair<int, int>> f;
    for (int i : idxs) f.push_back(edge_list[i]);
    return is_black_bipartite(contract_edges(g, f).graph);
  });
  if (!hit) return std::nullopt;
  std::vector<std::pair<int, int>> f;
  for (int i : *hit) f.push_back(edge_list[i]);
  return f;
}

std::optional<std::vector<std::pair<int, int>>> brute_edge_induced_cut(
    const ColoredGraph& g, int s, int t, int k) {
  auto all = g.edges();
  std::vector<std::pair<int, int>> edge_list;
  for (const auto& [u, v, c] : all) {
    (void)c;
    edge_list.emplace_back(u, v);
  }
  int m = static_cast<int>(edge_list.size());
  VertexSet universe;
  for (int i = 0; i < m; ++i) universe.push_back(i);
  auto hit = first_subset(universe, k, 0, [&](const VertexSet& idxs) {
    // the separator is any subset of the endpoints; removing all of them
    // except s and t themselves is the strongest choice
    VertexSet endpoints;
    for (int i : idxs) {
      vset::insert(endpoints, edge_list[i].first);
      vset::insert(endpoints, edge_list[i].second);
    }
    endpoints = vset::difference(
        endpoints, {std::min(s, t), std::max(s, t)});
    return is_separator(g, endpoints, {s}, {t});
  });
  if (!hit) return std::nullopt;
  std::vector<std::pair<int, int>> f;
  for (int i : *hit) f.push_back(edge_list[i]);
  return f;
}

std::optional<VertexSet> brute_steiner(const ColoredGraph& g,
                                       const VertexSet& x, int k) {
  VertexSet universe;
  for (int v = 0; v < g.n(); ++v) universe.push_back(v);
  return first_subset(universe, k, 0, [&](const VertexSet& s) {
    if (!vset::is_subset(x, s)) return false;
    // connected over all edges (steiner instances carry no red edges)
    if (s.empty()) return x.empty();
    auto sub = induced_subgraph(g, s);
    return components(sub.graph).size() == 1;
  });
}

}  // namespace sepred::oracle
